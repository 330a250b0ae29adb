#pragma once

#include <cstddef>
#include <vector>

#include "joinlat/bitset.hpp"
#include "joinlat/lattice.hpp"
#include "joinlat/poset.hpp"

namespace joinlat {

/// Join graph: vertices are the proper subgroups, H and K adjacent iff
/// <H, K> = G. Vertex v is subgroup id v of the lattice it was built from
/// (ids 0..top-1).
struct JoinGraph {
  std::vector<BitSet> adjacency;

  std::size_t vertex_count() const { return adjacency.size(); }
  std::size_t edge_count() const;
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency[a].test(b); }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  /// Copy in which vertex v is renamed new_name[v].
  JoinGraph relabeled(const std::vector<std::size_t> &new_name) const;
};

JoinGraph build_delta(const SubgroupLattice &lat);

inline const BitSet &neighborhood(const JoinGraph &g, std::size_t v) { return g.adjacency[v]; }

/// Intersection of the maximal subgroups containing x; G if there are none.
inline SubgroupId tilde(const SubgroupLattice &lat, SubgroupId x) { return lat.maximal_closure(x); }

/// Vertices grouped by equal neighborhoods; classes ordered by their lowest
/// member, members ascending.
std::vector<std::vector<std::size_t>> equivalence_classes(const JoinGraph &g);

/// Lattice recovered from the graph alone: one element per equivalence
/// class, ordered by neighborhood inclusion of representatives, plus an
/// adjoined top (the last element) standing for G.
struct ReconstructedLattice {
  std::vector<std::vector<std::size_t>> classes;
  Poset order;

  std::size_t top() const { return classes.size(); }
};

ReconstructedLattice reconstruct_mi(const JoinGraph &g);

} // namespace joinlat
