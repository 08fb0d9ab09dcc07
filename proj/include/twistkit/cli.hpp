#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistkit::cli
{

enum ExitCode
{
    Success = 0,
    ExpectationFailed = 1,
    InputError = 2,
};

/// Runs one twist-kit invocation. `args` excludes the program name.
/// `terminal` enables ANSI colour for text output unless TWISTKIT_NO_COLOR
/// is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool terminal = false);

} // namespace twistkit::cli
