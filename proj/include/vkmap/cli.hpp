#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vkmap {

/// Subcommand CLI over the text formats. Machine-readable JSON goes to
/// `out`; diagnostics to `err`. Exit code 0 means pass/ok, 1 means a
/// counterexample or failed condition, 2 means an input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vkmap
