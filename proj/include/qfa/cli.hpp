#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfa {

// Full command dispatch; returns the process exit code.
// 0 success, 1 unknown verdict present, 2 hypothesis violated,
// 3 invalid input / unsupported request, 4 ambiguous sign.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Packaged invariant suite, printed one line per check.
int run_selftest(std::ostream& out);

}  // namespace qfa
