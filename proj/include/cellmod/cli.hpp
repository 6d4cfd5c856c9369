#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellmod {

// Runs one command.  Exit codes: 0 success or matched verdict, 1 mismatched
// verdict, 2 usage or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellmod
