#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imcn {

// Front end behind the imcn binary. args excludes the program name; the
// stream parameters exist so tests can capture a run wholesale.
// Returns 0 on success, 1 on input errors, 2 when a cap is exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace imcn
