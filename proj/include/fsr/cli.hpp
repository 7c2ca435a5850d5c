#pragma once

#include <string>
#include <vector>

namespace fsr {

/// Exit codes: 0 success, 1 input or validation error, 2 internal invariant
/// violation. Output is byte-deterministic for a given file and flag set.
int run_cli(const std::vector<std::string>& args);

}  // namespace fsr
