#pragma once

// Brute-force reference computations used by the unit tests. They share no
// code with the library beyond the group's multiplication table.

#include <cstdint>
#include <set>
#include <vector>

#include "joinlat/group.hpp"
#include "joinlat/lattice.hpp"

namespace oracle {

using joinlat::Elem;
using joinlat::FiniteGroup;

using ElemSet = std::set<Elem>;

inline bool is_subgroup(const FiniteGroup &g, const ElemSet &s) {
  if (!s.count(g.identity())) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!s.count(g.multiply(a, b))) return false;
  return true;
}

/// Every subgroup, by testing all subsets that contain the identity.
/// Only for orders up to about 16.
inline std::set<ElemSet> all_subgroups(const FiniteGroup &g) {
  const std::size_t n = g.order();
  std::set<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    ElemSet s{0};
    for (std::size_t i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1U) s.insert(static_cast<Elem>(i));
    if (is_subgroup(g, s)) out.insert(s);
  }
  return out;
}

inline ElemSet closure(const FiniteGroup &g, ElemSet s) {
  s.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    const ElemSet snapshot = s;
    for (Elem a : snapshot)
      for (Elem b : snapshot)
        if (s.insert(g.multiply(a, b)).second) grew = true;
  }
  return s;
}

inline ElemSet as_set(const joinlat::BitSet &b) {
  ElemSet s;
  b.for_each([&](std::size_t i) { s.insert(static_cast<Elem>(i)); });
  return s;
}

inline bool is_normal(const FiniteGroup &g, const ElemSet &s) {
  for (Elem x : s)
    for (Elem y = 0; y < g.order(); ++y)
      if (!s.count(g.conjugate(x, y))) return false;
  return true;
}

/// mu(H, G) from the other side of the incidence algebra: mu(H, H) = 1 and
/// mu(H, K) = -sum of mu(H, L) over H <= L < K.
inline std::vector<long long> mu_from_below(const joinlat::SubgroupLattice &lat) {
  const std::size_t n = lat.size();
  std::vector<long long> out(n);
  for (std::size_t h = 0; h < n; ++h) {
    std::vector<long long> mu(n, 0);
    mu[h] = 1;
    for (std::size_t k = h + 1; k < n; ++k) {
      if (!lat.leq(h, k)) continue;
      long long sum = 0;
      for (std::size_t l = h; l < k; ++l)
        if (lat.leq(h, l) && lat.leq(l, k)) sum += mu[l];
      mu[k] = -sum;
    }
    out[h] = mu[n - 1];
  }
  return out;
}

/// A group together with its subgroup lattice, which points into it.
struct Loaded {
  FiniteGroup g;
  joinlat::SubgroupLattice lat;

  explicit Loaded(const char *spec, const joinlat::Limits &limits = {})
      : g(joinlat::build(spec, limits)), lat(joinlat::enumerate_subgroups(g, limits)) {}
  Loaded(const Loaded &) = delete;
  Loaded &operator=(const Loaded &) = delete;
};

} // namespace oracle
