#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mbqc {

// Entry point behind the mbqc binary; args exclude the program name.
// Returns 0 on success, 1 when a verification verdict is negative, 2 on
// input or usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace mbqc
