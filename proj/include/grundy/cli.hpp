#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grundy::cli {

// Exit codes: 0 success, 1 failed validation or internal error, 2 file parse
// error, 3 invalid modulator or bad input, 4 guard or budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grundy::cli
