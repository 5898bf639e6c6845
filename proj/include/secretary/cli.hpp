#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secretary {

/// Command dispatch behind the `secretary` binary. `args` excludes the
/// program name. Data goes to `out`, diagnostics to `err`. Exit codes:
/// 0 success, 1 verification failure, 2 usage/constraint error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secretary
