#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baba::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 2,
    exit_usage_error = 3,
    exit_timeout = 4,
};

/// Runs `bipolar-aba` with `args` (excluding the program name). `--input -` reads `in`.
int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err);

} // namespace baba::cli
