#pragma once

namespace exlp::cli {

/// exlp command line: parse, solve, report. Exit codes: 0 success, 2 oracle
/// failure, 3 parse error, 4 round/iteration limits, 1 anything else.
int run(int argc, const char* const* argv);

}  // namespace exlp::cli
