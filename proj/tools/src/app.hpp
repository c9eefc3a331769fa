#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cylrad::app {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kConfigError = 2,
    kNotConverged = 3,
    kOutsideWindow = 4,
};

// CSV goes to `out` unless --output names a file; diagnostics go to `err`.
// Nothing is written to the CSV destination unless the command succeeds.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest round-trip decimal.
std::string format_double(double v);

}  // namespace cylrad::app
