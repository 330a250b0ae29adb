#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "joinlat/bitset.hpp"
#include "joinlat/config.hpp"
#include "joinlat/group.hpp"
#include "joinlat/poset.hpp"

namespace joinlat {

using SubgroupId = std::size_t;

/// Every subgroup of a group as an element set, ids sorted by (order,
/// element list). The parent group must outlive the lattice.
class SubgroupLattice {
public:
  static constexpr SubgroupId npos = static_cast<SubgroupId>(-1);

  const FiniteGroup &group() const { return *group_; }
  std::size_t size() const { return subgroups_.size(); }

  const BitSet &elements(SubgroupId id) const { return subgroups_[id]; }
  std::size_t order(SubgroupId id) const { return orders_[id]; }
  /// Generators recorded during enumeration.
  const std::vector<Elem> &generators(SubgroupId id) const { return generators_[id]; }

  /// Ids of subgroups containing `id` (including itself).
  const BitSet &above(SubgroupId id) const { return above_[id]; }
  /// Ids of subgroups contained in `id` (including itself).
  const BitSet &below(SubgroupId id) const { return below_[id]; }
  bool leq(SubgroupId a, SubgroupId b) const { return above_[a].test(b); }

  SubgroupId top_id() const { return size() - 1; }
  SubgroupId bottom_id() const { return 0; }
  const std::vector<SubgroupId> &maximal_ids() const { return maximal_; }
  SubgroupId frattini_id() const { return frattini_; }

  /// Id of the subgroup with exactly these elements, or npos.
  SubgroupId id_of(const BitSet &elements) const;
  /// Generated subgroup <a, b>: the least common upper bound.
  SubgroupId join(SubgroupId a, SubgroupId b) const { return (above_[a] & above_[b]).first(); }
  SubgroupId meet(SubgroupId a, SubgroupId b) const { return id_of(subgroups_[a] & subgroups_[b]); }
  /// Intersection of the maximal subgroups containing `id`; top if none.
  SubgroupId maximal_closure(SubgroupId id) const;

  Poset as_poset() const { return Poset{above_}; }

private:
  friend SubgroupLattice enumerate_subgroups(const FiniteGroup &, const Limits &);

  const FiniteGroup *group_ = nullptr;
  std::vector<BitSet> subgroups_;
  std::vector<std::size_t> orders_;
  std::vector<std::vector<Elem>> generators_;
  std::vector<BitSet> above_, below_;
  std::vector<SubgroupId> maximal_;
  SubgroupId frattini_ = 0;
  std::unordered_map<BitSet, SubgroupId, BitSetHash> index_;
};

/// Seeds with the cyclic subgroups and closes under joins with cyclic
/// subgroups. Throws ResourceError past `limits.subgroup_cap` subgroups.
SubgroupLattice enumerate_subgroups(const FiniteGroup &g, const Limits &limits = {});

inline const std::vector<SubgroupId> &maximal_subgroups(const SubgroupLattice &lat) {
  return lat.maximal_ids();
}
inline SubgroupId frattini(const SubgroupLattice &lat) { return lat.frattini_id(); }

/// Subgroups invariant under conjugation by the group generators.
std::vector<SubgroupId> normal_subgroups(const SubgroupLattice &lat);
bool is_normal(const SubgroupLattice &lat, SubgroupId id);

/// G together with all intersections of maximal subgroups.
class MILattice {
public:
  const std::vector<SubgroupId> &member_ids() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(SubgroupId id) const { return position_.count(id) != 0; }
  /// Position of a member id within member_ids().
  std::size_t position(SubgroupId id) const { return position_.at(id); }

  SubgroupId meet(SubgroupId a, SubgroupId b) const {
    return members_[meet_[position(a) * size() + position(b)]];
  }
  SubgroupId join(SubgroupId a, SubgroupId b) const {
    return members_[join_[position(a) * size() + position(b)]];
  }
  SubgroupId top_id() const { return members_.back(); }
  SubgroupId bottom_id() const { return members_.front(); }

  /// Inclusion order on positions.
  Poset as_poset(const SubgroupLattice &lat) const;

private:
  friend MILattice mi_lattice(const SubgroupLattice &);

  std::vector<SubgroupId> members_;
  std::unordered_map<SubgroupId, std::size_t> position_;
  std::vector<std::size_t> meet_, join_;
};

MILattice mi_lattice(const SubgroupLattice &lat);

struct IntersectionFamilyReport {
  /// Fewest maximal subgroups meeting in the Frattini subgroup (0 for the
  /// trivial group).
  std::size_t min_size = 0;
  /// One family attaining min_size.
  std::vector<SubgroupId> witness;
  /// Sizes of all inclusion-minimal such families; empty when the
  /// enumeration ran out of budget.
  std::vector<std::size_t> minimal_family_sizes;
  /// Whether every inclusion-minimal family has the same size; absent when
  /// the enumeration ran out of budget.
  std::optional<bool> uniform;
};

/// `budget` bounds the nodes visited by the inclusion-minimal family
/// enumeration; min_size is always exact.
IntersectionFamilyReport min_trivial_intersection_family(const SubgroupLattice &lat,
                                                         std::size_t budget = 10'000'000);

} // namespace joinlat
