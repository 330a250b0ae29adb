#include "joinlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "joinlat/errors.hpp"

namespace joinlat {

SubgroupId SubgroupLattice::id_of(const BitSet &elements) const {
  auto it = index_.find(elements);
  return it == index_.end() ? npos : it->second;
}

SubgroupId SubgroupLattice::maximal_closure(SubgroupId id) const {
  BitSet acc = group_->all_elements();
  bool any = false;
  for (SubgroupId m : maximal_) {
    if (!above_[id].test(m)) continue;
    acc &= subgroups_[m];
    any = true;
  }
  return any ? id_of(acc) : top_id();
}

SubgroupLattice enumerate_subgroups(const FiniteGroup &g, const Limits &limits) {
  struct Found {
    BitSet elements;
    std::vector<Elem> gens;
  };
  std::vector<Found> found;
  std::unordered_map<BitSet, std::size_t, BitSetHash> seen;

  auto insert = [&](BitSet elements, std::vector<Elem> gens) {
    if (seen.count(elements)) return;
    if (found.size() >= limits.subgroup_cap)
      throw ResourceError("group '" + g.label() + "' has more than " +
                          std::to_string(limits.subgroup_cap) + " subgroups");
    seen.emplace(elements, found.size());
    found.push_back({std::move(elements), std::move(gens)});
  };

  insert(g.generated_subgroup({}), {});
  for (Elem x = 1; x < g.order(); ++x) insert(g.generated_subgroup({x}), {x});
  const std::size_t cyclic_count = found.size();

  // Every subgroup is a join of cyclic subgroups, so joining each known
  // subgroup with each cyclic one reaches a fixpoint containing all of them.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 1; c < cyclic_count; ++c) {
      if (found[c].elements.is_subset_of(found[i].elements)) continue;
      auto gens = found[i].gens;
      gens.push_back(found[c].gens.front());
      auto joined = g.generated_subgroup(gens);
      if (!seen.count(joined)) insert(std::move(joined), std::move(gens));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> orders(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) orders[i] = found[i].elements.count();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    return found[a].elements.index_less(found[b].elements);
  });

  SubgroupLattice lat;
  lat.group_ = &g;
  const std::size_t n = found.size();
  for (std::size_t id = 0; id < n; ++id) {
    auto &f = found[perm[id]];
    lat.orders_.push_back(orders[perm[id]]);
    lat.index_.emplace(f.elements, id);
    lat.subgroups_.push_back(std::move(f.elements));
    lat.generators_.push_back(std::move(f.gens));
  }

  lat.above_.assign(n, BitSet(n));
  lat.below_.assign(n, BitSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (lat.orders_[b] % lat.orders_[a]) continue;
      if (b != a && lat.orders_[b] == lat.orders_[a]) continue;
      if (!lat.subgroups_[a].is_subset_of(lat.subgroups_[b])) continue;
      lat.above_[a].set(b);
      lat.below_[b].set(a);
    }
  }

  const SubgroupId top = n - 1;
  for (std::size_t a = 0; a + 1 < n; ++a)
    if (lat.above_[a].count() == 2) lat.maximal_.push_back(a);

  BitSet acc = g.all_elements();
  for (SubgroupId m : lat.maximal_) acc &= lat.subgroups_[m];
  lat.frattini_ = lat.maximal_.empty() ? top : lat.id_of(acc);
  return lat;
}

bool is_normal(const SubgroupLattice &lat, SubgroupId id) {
  const auto &g = lat.group();
  const auto &h = lat.elements(id);
  for (Elem s : g.generators())
    for (Elem x : lat.generators(id))
      if (!h.test(g.conjugate(x, s))) return false;
  return true;
}

std::vector<SubgroupId> normal_subgroups(const SubgroupLattice &lat) {
  std::vector<SubgroupId> out;
  for (SubgroupId id = 0; id < lat.size(); ++id)
    if (is_normal(lat, id)) out.push_back(id);
  return out;
}

Poset MILattice::as_poset(const SubgroupLattice &lat) const {
  return Poset::from_relation(size(), [&](std::size_t a, std::size_t b) {
    return lat.leq(members_[a], members_[b]);
  });
}

MILattice mi_lattice(const SubgroupLattice &lat) {
  // Intersection closure of the maximal subgroups, plus G.
  std::set<SubgroupId> members{lat.top_id()};
  std::vector<SubgroupId> queue;
  for (SubgroupId m : lat.maximal_ids())
    if (members.insert(m).second) queue.push_back(m);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (SubgroupId m : lat.maximal_ids()) {
      SubgroupId x = lat.meet(queue[i], m);
      if (members.insert(x).second) queue.push_back(x);
    }

  MILattice mi;
  mi.members_.assign(members.begin(), members.end());
  for (std::size_t i = 0; i < mi.members_.size(); ++i) mi.position_.emplace(mi.members_[i], i);

  const std::size_t n = mi.size();
  mi.meet_.assign(n * n, 0);
  mi.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      SubgroupId x = mi.members_[a], y = mi.members_[b];
      std::size_t meet = mi.position_.at(lat.meet(x, y));
      std::size_t join = mi.position_.at(lat.maximal_closure(lat.join(x, y)));
      mi.meet_[a * n + b] = mi.meet_[b * n + a] = meet;
      mi.join_[a * n + b] = mi.join_[b * n + a] = join;
    }
  return mi;
}

IntersectionFamilyReport min_trivial_intersection_family(const SubgroupLattice &lat,
                                                         std::size_t budget) {
  IntersectionFamilyReport report;
  const auto &maximals = lat.maximal_ids();
  const SubgroupId target = lat.frattini_id();
  if (maximals.empty()) {
    report.uniform = true;
    return report;
  }

  // Breadth-first over running intersections; a state already reached with
  // fewer subgroups is never revisited.
  std::unordered_map<SubgroupId, std::pair<SubgroupId, SubgroupId>> parent;
  std::vector<SubgroupId> frontier;
  for (SubgroupId m : maximals)
    if (parent.emplace(m, std::pair{lat.npos, m}).second) frontier.push_back(m);
  std::size_t depth = 1;
  while (!parent.count(target)) {
    std::vector<SubgroupId> next;
    for (SubgroupId x : frontier)
      for (SubgroupId m : maximals) {
        SubgroupId y = lat.meet(x, m);
        if (parent.emplace(y, std::pair{x, m}).second) next.push_back(y);
      }
    frontier = std::move(next);
    ++depth;
  }
  report.min_size = depth;
  for (SubgroupId x = target; x != lat.npos; x = parent.at(x).first)
    report.witness.push_back(parent.at(x).second);
  std::sort(report.witness.begin(), report.witness.end());

  // Inclusion-minimal families: members added in increasing index order must
  // each shrink the running intersection, otherwise they are redundant.
  const auto &g = lat.group();
  std::set<std::size_t> sizes;
  std::vector<std::size_t> family;
  std::size_t visited = 0;
  bool exhausted = false;

  auto irredundant = [&] {
    for (std::size_t skip = 0; skip < family.size(); ++skip) {
      BitSet acc = g.all_elements();
      for (std::size_t k = 0; k < family.size(); ++k)
        if (k != skip) acc &= lat.elements(maximals[family[k]]);
      if (acc == lat.elements(target)) return false;
    }
    return true;
  };

  auto dfs = [&](auto &self, std::size_t start, const BitSet &current) -> void {
    for (std::size_t j = start; j < maximals.size() && !exhausted; ++j) {
      if (++visited > budget) {
        exhausted = true;
        return;
      }
      BitSet next = current & lat.elements(maximals[j]);
      if (next == current) continue;
      family.push_back(j);
      if (next == lat.elements(target)) {
        if (irredundant()) sizes.insert(family.size());
      } else {
        self(self, j + 1, next);
      }
      family.pop_back();
    }
  };
  dfs(dfs, 0, g.all_elements());

  if (!exhausted) {
    report.minimal_family_sizes.assign(sizes.begin(), sizes.end());
    report.uniform = sizes.size() <= 1;
  }
  return report;
}

} // namespace joinlat
