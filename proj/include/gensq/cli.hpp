#ifndef GENSQ_CLI_HPP
#define GENSQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gensq {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

// Runs the command line tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gensq

#endif
