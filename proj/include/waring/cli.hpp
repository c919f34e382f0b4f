#ifndef WARING_CLI_HPP
#define WARING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace waring::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;          // verification failed / search did not converge
inline constexpr int kUsageOrParse = 2;   // bad arguments, unreadable or malformed input
inline constexpr int kInternal = 3;       // a constructed certificate failed to verify

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waring::cli

#endif  // WARING_CLI_HPP
