#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace constelloid::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Commands: check, construct, verify, enumerate, iso, mine.
// Exit codes: 0 all checks pass, 1 a checked property fails, 2 usage or
// parse error.  CONSTELLOID_CAP overrides the enumeration size cap.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace constelloid::cli
