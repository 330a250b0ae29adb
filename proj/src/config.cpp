#include "joinlat/config.hpp"

#include <cstdlib>

namespace joinlat {

Limits Limits::from_env() {
  Limits limits;
  if (const char *v = std::getenv("JOINLAT_MAX_ORDER")) {
    char *end = nullptr;
    long long n = std::strtoll(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) limits.max_order = static_cast<std::size_t>(n);
  }
  return limits;
}

} // namespace joinlat
