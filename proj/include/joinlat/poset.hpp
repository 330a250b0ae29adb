#pragma once

#include <cstddef>
#include <vector>

#include "joinlat/bitset.hpp"

namespace joinlat {

/// Finite poset on {0..size-1}; `above[a]` holds every b with a <= b
/// (reflexive).
struct Poset {
  std::vector<BitSet> above;

  std::size_t size() const { return above.size(); }
  bool leq(std::size_t a, std::size_t b) const { return above[a].test(b); }

  /// Builds the upward rows from a <= predicate.
  template <class Leq> static Poset from_relation(std::size_t n, Leq &&leq) {
    Poset p;
    p.above.assign(n, BitSet(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (leq(a, b)) p.above[a].set(b);
    return p;
  }

  /// True iff the relation is reflexive, antisymmetric and transitive.
  bool is_partial_order() const;

  std::vector<std::size_t> downset_sizes() const;
  std::vector<std::size_t> upset_sizes() const;
  /// Length of the longest chain from a minimal element up to each element.
  std::vector<std::size_t> heights() const;
  /// Length of the longest chain from each element up to a maximal element.
  std::vector<std::size_t> depths() const;
  std::size_t count_minimal() const;
  std::size_t count_maximal() const;
  /// Number of elements covering a minimum (meaningful for bounded posets).
  std::size_t count_atoms() const;
  std::size_t count_coatoms() const;
};

/// Componentwise order on pairs; element (a, b) has index a * q.size() + b.
Poset poset_product(const Poset &p, const Poset &q);

} // namespace joinlat
