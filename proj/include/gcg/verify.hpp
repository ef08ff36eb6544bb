#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gcg {

struct CheckResult {
  std::string suite;
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  double seconds = 0.0;

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  int threads = 1;
  std::uint64_t seed = 0x5eed2024;
  // Runs the slow symbolic cluster checks over the full k range.
  bool exhaustive = false;
};

// coeffring, laurent, multinom, dyckpath, compat, greedy, cluster.
const std::vector<std::string>& verify_suite_names();

// Runs one suite, or every suite for "all". Throws InvalidArgument for an
// unknown name. Results come back in a fixed order.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options = {});

// Runs the named checks of one suite, in the order given. Throws
// InvalidArgument for an unknown suite or check.
std::vector<CheckResult> run_checks(const std::string& suite, const std::vector<std::string>& names,
                                    const VerifyOptions& options = {});

}  // namespace gcg
