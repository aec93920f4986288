#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cornerkit {

inline constexpr char const* tool_version = "0.1.0";

// Runs one command line (without the program name) and writes the JSON
// report, or the requested document, to out. Exit codes: 0 every verdict
// holds, 1 a verdict fails, 2 malformed input or a refused guard, 3 a
// search bound was exceeded.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace cornerkit
