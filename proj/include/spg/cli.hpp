#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spg {

// Runs the command line `args` (program name first). Returns 0 on success,
// 1 when a check fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spg
