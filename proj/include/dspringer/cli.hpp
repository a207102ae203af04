#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace dspringer::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2, kGuard = 3 };

/// Result of one verification sweep.
struct VerifyOutcome {
  std::string check;
  int max_n = 0;
  long long cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Names accepted by `verify`.
const std::vector<std::string>& verification_names();
/// Runs the named sweep over every case up to max_n, in parallel.
VerifyOutcome run_verification(const std::string& check, int max_n);

/// Names accepted by `golden`.
const std::vector<std::string>& golden_names();
nlohmann::ordered_json golden_document(const std::string& name);

/// Full command line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dspringer::cli
