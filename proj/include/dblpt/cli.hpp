#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dblpt {

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 for malformed or invalid input, 1 for a request outside the computable
/// range.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dblpt
