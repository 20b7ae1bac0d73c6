// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <cstdio>
#include <map>

#include "provar/reproduce.hpp"

int main() {
  std::map<int, std::pair<bool, std::string>> criteria;
  for (int i = 1; i <= 9; ++i) criteria[i] = {true, ""};
  for (const provar::CheckResult& c : provar::run_reproduction()) {
    auto& [pass, names] = criteria[c.criterion];
    pass = pass && c.pass;
    names += (names.empty() ? "" : ", ") + c.name;
    if (!c.pass)
      std::fprintf(stderr, "  %s: expected %s, got %s\n", c.name.c_str(),
                   c.expected.c_str(), c.actual.c_str());
  }
  bool all = true;
  for (const auto& [num, entry] : criteria) {
    all = all && entry.first;
    std::printf("criterion %d (%s): %s\n", num, entry.second.c_str(),
                entry.first ? "PASS" : "FAIL");
  }
  return all ? 0 : 1;
}
