#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scg::cli {

/// Runs one command (arguments without the program name).
/// Returns 0 on success, 1 for a negative answer or failed verification,
/// 2 for usage and parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scg::cli
