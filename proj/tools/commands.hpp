#ifndef Z2COH_TOOLS_COMMANDS_HPP
#define Z2COH_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace z2coh::cli {

enum ExitCode
{
    Success = 0,
    UsageError = 1,
    VerificationFailure = 2,
};

/// Runs the z2coh command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace z2coh::cli

#endif
