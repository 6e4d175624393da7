#pragma once

#include <iosfwd>

namespace mogap::cli {

// Exit codes: 0 success, 1 validation failure (bad flags/config, failed
// regression), 2 degenerate scheme or math domain error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// Property checks behind the `check` subcommand; true if all pass.
bool run_checks(std::ostream& out);

}  // namespace mogap::cli
