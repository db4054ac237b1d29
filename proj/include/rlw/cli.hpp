#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlw {

// Runs one command line (without the program name). Returns 0 on success or
// a definite answer, 2 when some answer ran out of fuel, 1 on error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlw
