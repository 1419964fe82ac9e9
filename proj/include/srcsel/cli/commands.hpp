#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srcsel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// Environment variable naming the config used when none is given.
inline constexpr const char* kConfigEnvVar = "SRCSEL_CONFIG";

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srcsel
