#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "joinlat/group.hpp"
#include "joinlat/lattice.hpp"

namespace joinlat {

/// (p, n, q): elementary abelian p^n when q is absent, otherwise
/// C_p^n x| C_q with C_q acting as a nontrivial power map.
struct PGroupSignature {
  long long p = 0;
  long long n = 0;
  std::optional<long long> q;

  friend bool operator==(const PGroupSignature &, const PGroupSignature &) = default;
};

enum class FactorKind { ElementaryAbelian, Lambda, LambdaStar, Other };

std::string to_string(FactorKind kind);

struct CoprimeFactor {
  SubgroupId id = 0;
  FactorKind kind = FactorKind::Other;
};

struct Classification {
  bool soluble = false;
  bool nilpotent = false;
  bool supersoluble = false;
  bool frattini_free = false;
  std::optional<PGroupSignature> pgroup_signature;
  std::vector<CoprimeFactor> coprime_factors;
  /// Absent unless the group is Frattini-free.
  std::optional<bool> in_D;
  std::optional<bool> in_M;
  std::optional<std::string> partner_spec;
};

bool is_soluble(const FiniteGroup &g);
bool is_nilpotent(const FiniteGroup &g);
bool is_supersoluble(const FiniteGroup &g);
/// Lattice-based variant; avoids rebuilding the lattice.
bool is_supersoluble(const SubgroupLattice &lat);

std::optional<PGroupSignature> is_pgroup_class(const FiniteGroup &g);

/// Finest decomposition into normal subgroups of pairwise coprime order,
/// ids ascending.
std::vector<SubgroupId> coprime_factorization(const SubgroupLattice &lat);

/// Decomposition of `whole` (a normal subgroup) into directly
/// indecomposable normal factors, smallest first.
std::vector<SubgroupId> direct_factors(const SubgroupLattice &lat, SubgroupId whole);

struct Membership {
  bool member = false;
  std::optional<std::string> partner_spec;
};

/// Frattini-free groups only; throws InputError otherwise.
Membership in_D(const SubgroupLattice &lat);
Membership in_M(const SubgroupLattice &lat);

/// Kind of one coprime factor together with the spec of its nilpotent
/// counterpart when the kind is not Other.
std::pair<FactorKind, std::optional<GroupSpec>> classify_coprime_factor(const SubgroupLattice &lat,
                                                                        SubgroupId factor);

enum class PartnerMode { Delta, M };

/// Scans products of elementary abelian groups of order <= max_order in
/// spec-string order for one whose join graph (Delta) or M lattice (M) is
/// isomorphic to the group's. Frattini-free groups only.
std::optional<std::string> partner_search(const SubgroupLattice &lat, std::size_t max_order,
                                          PartnerMode mode, const Limits &limits = {});

/// Subgroup count of a product of elementary abelian groups.
std::size_t elementary_abelian_subgroup_count(const std::vector<std::pair<long long, int>> &primes);

Classification classify(const SubgroupLattice &lat);

} // namespace joinlat
