#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace esd::cli {

// Exit codes.
inline constexpr int kOk = 0;         // success, or a positive answer
inline constexpr int kNegative = 1;   // not ESD, none exists, unsupported
inline constexpr int kUsage = 2;      // bad arguments or malformed input
inline constexpr int kAborted = 3;    // node/time limit or size guard hit

// Runs one command line. args[0] is the program name. Results go to out,
// diagnostics to err; "-" as a graph path reads from in.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace esd::cli
