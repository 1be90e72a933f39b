#pragma once

#include <string>
#include <vector>

namespace ssp {

struct CliResult {
  int exit_code = 0;   // 0 success, 1 violations/internal error, 2 usage
  std::string output;  // rendered report
  std::string error;   // diagnostics
};

// Runs one invocation; args excludes the program name. When --output is
// present the rendered report is also written to that file.
CliResult run_cli(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

}  // namespace ssp
