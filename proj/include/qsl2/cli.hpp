#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsl2 {

// Dispatches one command line (without the program name).  Diagnostics go to
// err.  Exit status: 0 success/verified, 1 verification failure, 2 parse
// error, 3 numeric domain error, 4 range error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace qsl2
