#pragma once
// In-process entry point for the command-line tool.  The binary's main() is
// a thin wrapper around run_cli so tests can drive every subcommand and
// byte-compare its output without spawning processes.
//
// Exit codes: 0 for certified / member / ok verdicts, 1 for refuted or
// non-member, 2 for inconclusive or budget-exhausted scans, 64 for usage
// errors (bad flags or malformed flag values), 65 for domain errors (valid
// text naming values the operation rejects), 70 for internal failures.

#include <iosfwd>
#include <string>
#include <vector>

namespace logcave {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logcave
