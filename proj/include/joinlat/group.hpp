#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "joinlat/bitset.hpp"
#include "joinlat/config.hpp"

namespace joinlat {

using Point = std::uint32_t;
using Elem = std::uint32_t;

/// A permutation of {0..degree-1} stored as its image list.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  /// `*this` first, then `other`.
  Permutation then(const Permutation &other) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const;
};

/// Parsed group constructor expression.
struct GroupSpec {
  enum class Kind { Cyclic, ElemAbelian, Dihedral, Sym, Alt, PGroup, DirectProduct, PaperExample648 };

  Kind kind = Kind::Cyclic;
  std::vector<long long> params;
  std::vector<GroupSpec> factors;

  /// Canonical text form, re-parseable.
  std::string to_string() const;
  /// Order implied by the constructor, saturating at `cap + 1`.
  unsigned long long expected_order(unsigned long long cap) const;

  static GroupSpec cyclic(long long n);
  static GroupSpec elem_abelian(long long p, long long k);
  static GroupSpec direct_product(std::vector<GroupSpec> factors);

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Parses the constructor grammar; whitespace is ignored.
/// Throws InputError on malformed or invalid specs.
GroupSpec parse_spec(std::string_view text);

/// A concrete finite group acting faithfully on {0..degree-1} with its full
/// element list and multiplication table. Element 0 is the identity and the
/// remaining elements are sorted by their image lists. Immutable once built.
class FiniteGroup {
public:
  /// Closes `generators` to a group. Throws ResourceError once the order
  /// passes `limits.max_order`.
  static FiniteGroup from_generators(std::size_t degree,
                                     const std::vector<Permutation> &generators,
                                     std::string label, const Limits &limits = {});

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::string &label() const { return label_; }

  const Permutation &element(Elem a) const { return elements_[a]; }
  const std::vector<Permutation> &elements() const { return elements_; }
  /// Generators as element indices, in the order given at construction.
  const std::vector<Elem> &generators() const { return generators_; }

  Elem identity() const { return 0; }
  Elem multiply(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  /// b^-1 a b
  Elem conjugate(Elem a, Elem b) const { return multiply(multiply(inverse(b), a), b); }
  Elem power(Elem a, long long n) const;
  std::size_t element_order(Elem a) const;

  /// Index of a permutation, or order() if it is not an element.
  Elem index_of(const Permutation &p) const;

  BitSet empty_set() const { return BitSet(order()); }
  BitSet all_elements() const;

  /// Smallest subgroup containing `seed`.
  BitSet generated_subgroup(std::span<const Elem> seed) const;
  BitSet generated_subgroup(std::initializer_list<Elem> seed) const {
    return generated_subgroup(std::span<const Elem>(seed.begin(), seed.size()));
  }

  bool is_abelian() const;

private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::string label_;
  std::vector<Permutation> elements_;
  std::vector<Elem> generators_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::unordered_map<Permutation, Elem, PermutationHash> index_;
};

/// Realizes a spec. Throws InputError for invalid specs and ResourceError
/// when the order exceeds `limits.max_order`.
FiniteGroup build(const GroupSpec &spec, const Limits &limits = {});
FiniteGroup build(std::string_view spec_text, const Limits &limits = {});

/// Action on the disjoint union of both point sets.
FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b,
                           const Limits &limits = {});

/// A subgroup given as an element set, as a group in its own right.
FiniteGroup subgroup_as_group(const FiniteGroup &g, const BitSet &subgroup,
                              const Limits &limits = {});

/// Few elements generating `subgroup`, chosen greedily by lowest index.
std::vector<Elem> small_generating_set(const FiniteGroup &g, const BitSet &subgroup);

struct Quotient {
  FiniteGroup group;
  /// Image of each element of the parent group.
  std::vector<Elem> projection;
};

/// G/N via the regular action on cosets. `normal` must be normal in g.
Quotient quotient(const FiniteGroup &g, const BitSet &normal, const Limits &limits = {});

bool is_prime(long long n);
/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

} // namespace joinlat
