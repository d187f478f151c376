#pragma once

// Command-line front end. Subcommands:
//
//   field    --p P [--s S --m M]                  field parameters
//   periods  --p P [--s S --m M] --N N [--method brute|closed|both]
//   code     --variant c1|c2 --p P [--s S --m M] --N N [--method table|oracle|both]
//   verify   [--max-r R]                          table vs oracle vs closed forms
//
// Every subcommand takes --output text|json. Reports are assembled as JSON
// first and the text form is rendered from that document, so both show the
// same numbers.

#include <iosfwd>
#include <string>
#include <vector>

namespace tracecodes::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInvalid = 2,    // bad or inapplicable parameters
  kGuardrail = 3,  // pair space above the guardrail without --force
};

/// Overrides the default guardrail when --max-pairs is not given.
inline constexpr const char* kMaxPairsEnv = "TRACECODES_MAX_PAIRS";
inline constexpr unsigned long long kDefaultMaxPairs = 10'000'000;

/// argv[0] is the program name. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tracecodes::cli
