#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcomb {

/// Entry point shared by the binary and the tests. Subcommands:
///   classify --family F --rank N [--node M] [--format text|json]
///   verify   --family F --rank N --node M [--lemma L] [--format text|json]
///   sweep    --max-rank R [--format text|json]
///   dot      --family F --rank N [--affine none|untwisted|twisted]
/// Exit code: 0 iff the run produced no fail verdicts; nonzero on bad flags,
/// invalid cases, or internal invariant breaches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylcomb
