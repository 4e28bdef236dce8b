#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcvx {

/// Run one CLI subcommand. Arguments exclude the program name. Writes one
/// JSON document (or a check report) to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 usage/parse/schema error, 2 domain error,
/// 3 check suite found counterexamples.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcvx
