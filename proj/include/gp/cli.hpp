#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gp {

// The command-line frontend, callable in-process so tests can capture
// output. args excludes the program name. Returns the exit code: 0 on
// success, 1 when a request cannot be honored, 2 on malformed input
// (files, word expressions, or the command line itself).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace gp
