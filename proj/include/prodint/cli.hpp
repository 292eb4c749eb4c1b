#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace prodint {

// Command-line entry point, separated from main() so tests can drive it
// in-process. `args` excludes the program name.
// Exit codes: 0 all obligations proved, 1 some unknown, 2 usage/parse/
// analysis error, 3 oracle soundness violation.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace prodint
