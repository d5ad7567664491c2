// Command-line front end; run_cli is the whole program minus process plumbing.

#ifndef RAGROWTH_TOOLS_CLI_HPP
#define RAGROWTH_TOOLS_CLI_HPP

#include <ostream>

namespace ragrowth {

/// Parses argv, runs one subcommand and writes its result to out.
/// Diagnostics go to err. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ragrowth

#endif  // RAGROWTH_TOOLS_CLI_HPP
