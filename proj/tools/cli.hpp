#ifndef FGKIT_TOOLS_CLI_HPP
#define FGKIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fgkit::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsage = 2 };

/// Entry point shared by the `fgkit` binary and the CLI tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "3,5,7", "3..12", "3-12" or a mix like "2,6..8". Throws std::invalid_argument.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace fgkit::cli

#endif  // FGKIT_TOOLS_CLI_HPP
