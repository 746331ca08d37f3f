#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtoric {

// args excludes the program name. JSON goes to out, the human summary and usage errors to err.
// Exit code: 0 success or pass, 1 verdict failure, 2 error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtoric
