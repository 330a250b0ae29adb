#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace joinlat {

/// Runs the joinlat command line. `args` excludes the program name.
/// Exit codes: 0 success (or isomorphic), 1 not isomorphic or a failed
/// verification, 2 input error, 3 resource limit.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace joinlat
