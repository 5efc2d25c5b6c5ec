#pragma once

#include <string>
#include <vector>

namespace qtrade::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitRuntime = 3;

struct Outcome {
  int exit_code = kExitOk;
  std::string out;  // report text (empty when written to --out)
  std::string err;  // diagnostic line on failure
};

// Runs one invocation; `args` excludes the program name. Nothing is printed;
// files named by --out, --csv and --dump-state are written.
Outcome run(const std::vector<std::string>& args);

}  // namespace qtrade::cli
