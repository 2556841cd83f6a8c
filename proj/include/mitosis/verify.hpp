#pragma once

// Verification suites shared by the CLI and the acceptance binary. Each case is
// tagged with the acceptance criterion it belongs to.

#include <string>
#include <vector>

namespace mitosis {

struct CaseResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double seconds = 0;

  bool passed() const;
};

/// paramitosis (1, 2), balanced (3, 5), demazure (4, 7), okounkov (6),
/// skew (8, 9).
const std::vector<std::string>& suite_names();

/// Golden ASCII files are compared only when golden_dir is non-empty.
SuiteReport run_suite(const std::string& name, const std::string& golden_dir = {});

SuiteReport verify_paramitosis(int max_n = 5);
SuiteReport verify_balanced();
SuiteReport verify_demazure();
SuiteReport verify_okounkov();
SuiteReport verify_skew(const std::string& golden_dir = {});

}  // namespace mitosis
