#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamreg::cli {

// Runs the hamreg command line with the given arguments (args[0] is the
// program name). Returns the process exit status: 0 success, 1 a verified
// claim was refuted, 2 usage, input or configuration error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hamreg::cli
