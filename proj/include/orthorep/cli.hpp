#pragma once

#include <string>
#include <vector>

namespace orthorep {

// Entry point behind the `orthorep` binary; exposed so tests can drive the
// full command surface in-process. Exit codes: 0 success/pass, 1 verification
// or check failure, 2 input/usage error.
int run_cli(const std::vector<std::string>& args);

}  // namespace orthorep
