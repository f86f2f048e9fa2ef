#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cat3 {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification fails, 2 on usage or input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cat3
