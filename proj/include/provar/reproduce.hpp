#ifndef PROVAR_REPRODUCE_HPP
#define PROVAR_REPRODUCE_HPP

#include <string>
#include <vector>

namespace provar {

struct CheckResult {
  std::string name;   // e.g. "figure1"
  int criterion;      // acceptance criterion number, 1-9
  std::string expected;
  std::string actual;
  bool pass;
};

/// Runs the acceptance checks (all of them, or the single named one).
/// Deterministic: fixed seeds, sorted iteration everywhere.
std::vector<CheckResult> run_reproduction(const std::string& only = "");

}  // namespace provar

#endif  // PROVAR_REPRODUCE_HPP
