#include "joinlat/poset.hpp"

#include <algorithm>

namespace joinlat {

bool Poset::is_partial_order() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!above[a].test(a)) return false;
    bool ok = true;
    above[a].for_each([&](std::size_t b) {
      if (b != a && above[b].test(a)) ok = false;
      // transitivity: everything above b is above a
      if (!above[b].is_subset_of(above[a])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<std::size_t> Poset::upset_sizes() const {
  std::vector<std::size_t> out(size());
  for (std::size_t a = 0; a < size(); ++a) out[a] = above[a].count();
  return out;
}

std::vector<std::size_t> Poset::downset_sizes() const {
  std::vector<std::size_t> out(size(), 0);
  for (std::size_t a = 0; a < size(); ++a) above[a].for_each([&](std::size_t b) { ++out[b]; });
  return out;
}

namespace {

// Elements ordered so that a < b in the poset implies a comes first.
std::vector<std::size_t> linear_extension(const Poset &p) {
  auto up = p.upset_sizes();
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return up[a] > up[b]; });
  return order;
}

} // namespace

std::vector<std::size_t> Poset::heights() const {
  std::vector<std::size_t> h(size(), 0);
  for (std::size_t a : linear_extension(*this))
    above[a].for_each([&](std::size_t b) {
      if (b != a) h[b] = std::max(h[b], h[a] + 1);
    });
  return h;
}

std::vector<std::size_t> Poset::depths() const {
  std::vector<std::size_t> d(size(), 0);
  auto order = linear_extension(*this);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    above[*it].for_each([&](std::size_t b) {
      if (b != *it) d[*it] = std::max(d[*it], d[b] + 1);
    });
  return d;
}

std::size_t Poset::count_minimal() const {
  auto down = downset_sizes();
  return static_cast<std::size_t>(std::count(down.begin(), down.end(), 1U));
}

std::size_t Poset::count_maximal() const {
  std::size_t n = 0;
  for (const auto &row : above) n += row.count() == 1;
  return n;
}

std::size_t Poset::count_atoms() const {
  auto h = heights();
  return static_cast<std::size_t>(std::count(h.begin(), h.end(), 1U)) *
         (count_minimal() == 1);
}

std::size_t Poset::count_coatoms() const {
  auto d = depths();
  return static_cast<std::size_t>(std::count(d.begin(), d.end(), 1U)) *
         (count_maximal() == 1);
}

Poset poset_product(const Poset &p, const Poset &q) {
  const std::size_t m = q.size();
  return Poset::from_relation(p.size() * m, [&](std::size_t x, std::size_t y) {
    return p.leq(x / m, y / m) && q.leq(x % m, y % m);
  });
}

} // namespace joinlat
