#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orderlab {

/// Runs the command line `args` (without the program name). Machine output
/// goes to `out`, diagnostics to `err`. Returns the process exit code:
/// 0 pass, 1 failures or incomplete, 2 usage or input error, 3 pass with findings.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orderlab
