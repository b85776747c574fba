#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ginv::cli {

// Exit codes of the ginv tool.
inline constexpr int kOk = 0;
inline constexpr int kNotExists = 1;     // requested inverse does not exist
inline constexpr int kInputError = 2;    // parse or spec error
inline constexpr int kDisagreement = 3;  // closed form and oracle differ

// Runs `ginv <args...>` (args excludes the program name). JSON goes to
// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ginv::cli
