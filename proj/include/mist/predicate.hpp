#pragma once

#include <string>
#include <vector>

namespace mist {

// Outcome of one named structural check.
struct Predicate {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when failed
};

inline bool all_passed(const std::vector<Predicate>& ps) {
  for (const Predicate& p : ps)
    if (!p.passed) return false;
  return true;
}

}  // namespace mist
