#pragma once

// The built-in verification suite: one criterion per known group-theoretic
// fact about the bundled configurations, each checked exactly.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gpd/configs.hpp"

namespace gpd {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

struct VerifyOptions {
  // Configuration source; replaceable for fault-injection in tests.
  std::function<Configuration(Builtin)> provider = [](Builtin b) {
    return builtin(b);
  };
  // Instance count for the randomized property suites (>= 100 by default).
  int iterations = 100;
  // When nonempty, run only the criteria with these ids.
  std::set<int> only;
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts = {});

}  // namespace gpd
