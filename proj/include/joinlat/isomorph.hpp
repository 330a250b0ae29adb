#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "joinlat/bitset.hpp"
#include "joinlat/joingraph.hpp"
#include "joinlat/poset.hpp"

namespace joinlat {

struct IsoResult {
  bool isomorphic = false;
  /// witness[v] is the image in the second structure of vertex v of the
  /// first one.
  std::optional<std::vector<std::size_t>> witness;
};

/// Directed graph with vertex colors, the common input of the searches.
struct ColoredDigraph {
  std::vector<BitSet> out;
  std::vector<std::size_t> colors;

  std::size_t size() const { return out.size(); }
  static ColoredDigraph from_graph(const JoinGraph &g);
  /// Strict order a < b as arcs, colored by (height, depth, down-set size,
  /// up-set size).
  static ColoredDigraph from_poset(const Poset &p);
};

/// Individualization-refinement search over both structures at once.
/// Throws ResourceError when more than `budget` search nodes are visited.
IsoResult digraph_iso(const ColoredDigraph &a, const ColoredDigraph &b,
                      std::size_t budget = 10'000'000);

IsoResult graph_iso(const JoinGraph &a, const JoinGraph &b, std::size_t budget = 10'000'000);
IsoResult poset_iso(const Poset &a, const Poset &b, std::size_t budget = 10'000'000);

/// Whether `witness` maps a's adjacency onto b's exactly.
bool replay_graph_witness(const JoinGraph &a, const JoinGraph &b,
                          const std::vector<std::size_t> &witness);
bool replay_poset_witness(const Poset &a, const Poset &b, const std::vector<std::size_t> &witness);

/// Byte string equal for two graphs iff they are isomorphic: the
/// lexicographically least relabeled adjacency over the refined search
/// tree, with automorphism pruning. Throws ResourceError past `budget`.
std::string canonical_form(const JoinGraph &g, std::size_t budget = 10'000'000);

} // namespace joinlat
