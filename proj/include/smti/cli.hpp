// Command-line front end, exposed as a library call so tests can drive it
// in-process. The `smti` binary is a thin wrapper around run().
//
// Subcommands: check, enumerate, gs, optimize, encode, answer-sets, gen.
// The global --machine flag switches every result to a JSON object on
// stdout. Output is byte-deterministic for fixed inputs and flags.
//
// Exit codes: 0 success (and "stable" for check), 1 unstable matching
// (check only), 2 usage or input error, 3 resource bound exceeded.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smti::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnstable = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBound = 3;

// `args` is the command line without the program name. Normal results go to
// `out`, diagnostics to `err`; the return value is the exit code above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace smti::cli
