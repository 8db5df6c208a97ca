#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catena::cli {

/// Subcommands: lattice | ring | group | tower | verify.
/// Exit codes: 0 success, 1 check failure, 2 input error.
/// CATENA_CAP overrides the default size caps.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catena::cli
