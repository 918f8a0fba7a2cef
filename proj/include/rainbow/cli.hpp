#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

enum ExitCode : int {
    Success = 0,
    PropertyViolation = 1,
    InputError = 2,
    Inconclusive = 3,
};

/// Entry point behind the `rainbow` tool. Results go to `out` in the
/// requested format, diagnostics to `err`.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace rainbow::cli
