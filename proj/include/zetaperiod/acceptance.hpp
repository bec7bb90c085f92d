#pragma once

// End-to-end acceptance checks, shared by the acceptance test binary and the
// `selftest` command.

#include <iosfwd>
#include <string>
#include <vector>

namespace zetaperiod {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every criterion against the newform files in `corpus_dir`, printing
/// one PASS/FAIL line per criterion to `log` as it finishes.
std::vector<CriterionResult> run_acceptance(const std::string& corpus_dir, std::ostream& log);

}  // namespace zetaperiod
