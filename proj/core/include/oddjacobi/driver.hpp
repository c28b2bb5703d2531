#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oddjacobi {

/// Executes one command-line invocation. `args` excludes the program name.
/// Returns the process exit code: 0 when every check passes, 1 when a
/// condition or construction precondition fails (the residuals are printed),
/// 2 on usage, syntax or input-shape errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace oddjacobi
