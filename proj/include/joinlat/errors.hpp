#pragma once

#include <stdexcept>
#include <string>

namespace joinlat {

/// Malformed or unsupported input (exit code 2 at the command line).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured limit (order bound, subgroup cap, search budget, integer
/// width) was exceeded (exit code 3 at the command line).
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace joinlat
