#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace roughcomb {

enum class VerifyProfile { Fast, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string observed;
  std::string tolerance;
  bool pass = false;
  bool informational = false;  // reported but never failing
  double seconds = 0.0;
};

// Test seams: the sensitivity unit test injects a perturbed density here to
// confirm the suite actually trips on a wrong constant.  Normal runs leave
// them empty.
struct VerifyHooks {
  std::function<double(double, double)> density_p_override;
};

// Runs the whole verification suite.  Fast shrinks the Monte-Carlo sizes
// (with correspondingly relaxed statistical gates, printed in the table);
// Full runs the desk-scale sizes.
std::vector<CriterionResult> run_verification(VerifyProfile profile, const VerifyHooks& hooks = {});

// Prints the table; returns 0 if every non-informational criterion passed,
// else 1.
int print_verification_report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace roughcomb
