#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liegsb {

// Command-line front end.  Exit codes: 0 pass/success, 1 verified negative
// (failed check, UNEQUAL word problem, incomplete completion), 2 usage or
// parse errors.  Output is byte-deterministic for fixed inputs.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liegsb
