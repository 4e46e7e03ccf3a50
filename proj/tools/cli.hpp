#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace trilocal::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kGenericity = 2,
  kAMatrixGuard = 3,
  kSuiteFailure = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteOptions {
  int max_n = 0;  // 0: suite default
  int samples = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
};

const std::vector<std::string>& suite_names();
// Prints one line per check; returns kOk or kSuiteFailure (with a JSON counterexample on err).
int run_suite(const std::string& name, const SuiteOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace trilocal::cli
