#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gtp {

/// Runs the `gtp` command line. Results go to `out` as JSON (or to --out);
/// returns 0 on success, 1 with a {code, message} object on module errors,
/// and 2 on parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtp
