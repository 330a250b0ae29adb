#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "joinlat/gfp.hpp"
#include "joinlat/lattice.hpp"

namespace joinlat {

/// Signed integer wide enough for Moebius values at desk scale. Arithmetic
/// through checked_add/checked_mul raises ResourceError on overflow.
using Integer = __int128;

Integer checked_add(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);
Integer checked_pow(Integer base, std::size_t exponent);
std::string to_string(Integer v);

/// Moebius function of the subgroup lattice, mu(H) = mu_G(H, G).
struct MoebiusTable {
  std::vector<Integer> values;

  Integer operator[](SubgroupId id) const { return values[id]; }
};

/// Top-down: mu(G) = 1 and mu(H) = -sum of mu(K) over K > H.
MoebiusTable moebius_table(const SubgroupLattice &lat);

/// One factor upper/lower of a chief series viewed as an F_p[G]-module.
struct ChiefFactorRecord {
  SubgroupId lower_id = 0;
  SubgroupId upper_id = 0;
  std::int64_t prime = 0;
  std::size_t dimension = 0;
  /// Matrix of conjugation by each group generator, in generator order.
  /// Column j holds the coordinates of the image of basis vector j.
  std::vector<MatrixFp> action;
  bool complemented = false;
  bool trivial_module = false;
  /// Equal labels iff the factors are isomorphic as G-modules.
  std::size_t iso_class = 0;
  /// |End_G(V)|
  std::uint64_t endo_order = 0;
};

enum class ChiefTieBreak { LowestId, HighestId };

/// Chief series built upward from the trivial subgroup, choosing among the
/// minimal normal overgroups by `tie_break`. Throws InputError if a factor is
/// not elementary abelian (the group is not soluble).
std::vector<ChiefFactorRecord> chief_series(const SubgroupLattice &lat,
                                            ChiefTieBreak tie_break = ChiefTieBreak::LowestId);

/// Basis of the space of F_p-linear maps T with T a(s) = b(s) T for all
/// generators s, each map flattened row-major (rows indexed by b's space).
std::vector<std::vector<std::int64_t>> intertwiners(const std::vector<MatrixFp> &a,
                                                    const std::vector<MatrixFp> &b);
/// Whether some intertwiner is invertible.
bool modules_isomorphic(const std::vector<MatrixFp> &a, const std::vector<MatrixFp> &b);

/// Closed formula for mu_G(1) of a soluble group from its chief factors.
Integer moe_formula(const SubgroupLattice &lat);
Integer moe_formula(const std::vector<ChiefFactorRecord> &factors, std::size_t group_order);

/// Subgroups outside M(G) with nonzero mu; empty when Hall vanishing holds.
std::vector<SubgroupId> hall_vanishing_check(const SubgroupLattice &lat, const MILattice &mi,
                                             const MoebiusTable &table);

/// Normal subgroups containing Frat(G) that are outside M(G) or have mu = 0.
std::vector<SubgroupId> normal_mi_check(const SubgroupLattice &lat, const MILattice &mi,
                                        const MoebiusTable &table);

} // namespace joinlat
