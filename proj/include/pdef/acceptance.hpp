#pragma once

// The end-to-end checks run by `pdef verify` and the acceptance test.

#include <string>
#include <vector>

namespace pdef::acceptance {

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string key;
  std::string title;
};

const std::vector<Criterion>& criteria();

// Runs the criteria whose key or number is listed, or all when `only` is
// empty.  Throws Error on an unknown key.
std::vector<CriterionResult> run(const std::vector<std::string>& only = {});

}  // namespace pdef::acceptance
