#ifndef MFCAT_TOOLS_CLI_HPP
#define MFCAT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mfcat::cli {

enum ExitCode : int { ok = 0, validation_failure = 1, usage_error = 2, inconclusive = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mfcat::cli

#endif  // MFCAT_TOOLS_CLI_HPP
