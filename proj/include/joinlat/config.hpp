#pragma once

#include <cstddef>

namespace joinlat {

struct Limits {
  std::size_t max_order = 1000;
  std::size_t subgroup_cap = 20000;
  std::size_t search_budget = 10'000'000;

  /// Defaults overridden by JOINLAT_MAX_ORDER when it is set to a positive
  /// integer.
  static Limits from_env();
};

} // namespace joinlat
