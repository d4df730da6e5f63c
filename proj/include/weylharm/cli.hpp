#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylharm {

/// Exit codes of run_command.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,   // well-formed input outside an operation's domain
  kExitSyntax = 2,   // malformed expression, size limit, or bad command line
  kExitInternal = 3, // a library invariant failed; should not happen
};

/// Runs one command. args excludes the program name, e.g.
/// {"reduce", "--m", "1", "dz*dzb"}. Errors go to err as
/// `error:<kind>:<message>` with kind one of domain, syntax, limit, usage,
/// internal. `--json` or WEYLHARM_JSON=1 selects JSON output; an expression
/// argument of `-` is read from in.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace weylharm
