#ifndef ADDSET_CLI_HPP
#define ADDSET_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace addset::cli {

/// Parses and executes one command line (without the program name).
/// Exit status: 0 success, 1 verification failure or required-hit miss,
/// 2 invalid input, 3 arithmetic overflow.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addset::cli

#endif  // ADDSET_CLI_HPP
