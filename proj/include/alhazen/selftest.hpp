#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace alhazen::selftest {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one entry per failure
};

struct Report {
  std::vector<SuiteResult> suites;
  int total_checks() const;
  int total_failures() const;
  bool ok() const { return total_failures() == 0; }
};

/// Runs the built-in verification suites (randomized pieces use the seed).
Report run_selftest(uint64_t seed);

}  // namespace alhazen::selftest
