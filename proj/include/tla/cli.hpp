#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tla {

// Parses and runs one command line (argv without the program name); writes
// reports to out and diagnostics to err, returns the process exit code.
//   0 success / all checks pass / finite_dimensional / points recovered
//   1 verification failure / not_finite_dimensional / relation violated
//   2 usage or schema error
//   3 invalid module parameters
//   4 highest vector is not a weight vector
//   5 insufficient data
//   6 unsupported field
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tla
