#pragma once

#include <iosfwd>

namespace mcpnet {

// Entry point of the command-line tool. Results go to out, diagnostics to
// err. Returns 0 on success, 1 on a failed verification or test battery and
// 2 on malformed flags or input files.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcpnet
