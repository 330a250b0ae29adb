#include "joinlat/joingraph.hpp"

#include <unordered_map>

namespace joinlat {

std::size_t JoinGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto &row : adjacency) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> JoinGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adjacency.size(); ++a)
    adjacency[a].for_each([&](std::size_t b) {
      if (a < b) out.emplace_back(a, b);
    });
  return out;
}

JoinGraph JoinGraph::relabeled(const std::vector<std::size_t> &new_name) const {
  const std::size_t n = vertex_count();
  JoinGraph out{std::vector<BitSet>(n, BitSet(n))};
  for (std::size_t a = 0; a < n; ++a)
    adjacency[a].for_each([&](std::size_t b) { out.adjacency[new_name[a]].set(new_name[b]); });
  return out;
}

JoinGraph build_delta(const SubgroupLattice &lat) {
  const std::size_t n = lat.size() - 1;
  JoinGraph g{std::vector<BitSet>(n, BitSet(n))};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (lat.join(a, b) == lat.top_id()) {
        g.adjacency[a].set(b);
        g.adjacency[b].set(a);
      }
  return g;
}

std::vector<std::vector<std::size_t>> equivalence_classes(const JoinGraph &g) {
  std::unordered_map<BitSet, std::size_t, BitSetHash> index;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = index.emplace(g.adjacency[v], classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

ReconstructedLattice reconstruct_mi(const JoinGraph &g) {
  ReconstructedLattice r;
  r.classes = equivalence_classes(g);
  const std::size_t n = r.classes.size();
  r.order = Poset::from_relation(n + 1, [&](std::size_t a, std::size_t b) {
    if (b == n) return true;
    if (a == n) return false;
    return g.adjacency[r.classes[a].front()].is_subset_of(g.adjacency[r.classes[b].front()]);
  });
  return r;
}

} // namespace joinlat
