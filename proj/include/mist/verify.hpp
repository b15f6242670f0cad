#pragma once

#include <optional>
#include <vector>

#include "mist/exact.hpp"
#include "mist/graph.hpp"
#include "mist/pipeline.hpp"
#include "mist/predicate.hpp"

namespace mist {

struct CoverStepVerification {
  std::optional<int> opt;  // of the irreducible graph, when within the oracle cap
  bool spanning_cycle = false;
  std::optional<ComponentStats> stats;
  std::vector<Predicate> predicates;
};

struct VerificationReport {
  std::vector<Predicate> predicates;  // whole-run checks
  std::vector<CoverStepVerification> cover_steps;
  std::optional<int> opt;
  // weight / opt when opt is known
  int ratio_num = 0;
  int ratio_den = 0;
  bool ratio_ok = true;

  bool passed() const;
  // Every failed predicate prefixed by its scope.
  std::vector<std::string> failures() const;
};

// Guarantee the algorithm promises: 17w >= 13opt, 4w >= 3opt, or w == opt.
bool meets_guarantee(Algorithm a, int weight, int opt);

// Needs a report produced with retain_state for the per-step predicates.
VerificationReport verify_run(const Graph& g, const RunReport& report, const OracleLimits& limits = {});

}  // namespace mist
