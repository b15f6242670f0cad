#pragma once

#include <optional>
#include <vector>

#include "mist/cover.hpp"
#include "mist/cover_solver.hpp"
#include "mist/graph.hpp"
#include "mist/predicate.hpp"

namespace mist {

// Simple mode runs Ops 5-7; refined mode adds Ops 12-14.
enum class PrepMode { Simple, Refined };

enum class RewriteKind { Op5, Op6, Op7, Op12, Op13, Op14 };

const char* to_string(RewriteKind kind);

struct CoverRewrite {
  RewriteKind kind = RewriteKind::Op5;
  EdgeSet removed;
  EdgeSet added;

  bool operator==(const CoverRewrite&) const = default;
};

// First applicable rewrite in kind order, lowest witnesses first.
std::optional<CoverRewrite> find_rewrite(const Cover& cover, const Graph& g, PrepMode mode);

// Throws InternalInvariant when the rewrite does not fit the cover.
void apply_rewrite(Cover& cover, const CoverRewrite& r);

// Progress measure: (edges, -components, path lengths descending, -dead paths).
// Every rewrite strictly increases it lexicographically.
struct PrepMeasure {
  int edges = 0;
  int neg_components = 0;
  std::vector<int> path_lengths;
  int neg_dead_paths = 0;

  auto operator<=>(const PrepMeasure&) const = default;
};

PrepMeasure measure(const Cover& cover, const Graph& g);

struct PreprocessResult {
  Cover cover;
  std::vector<CoverRewrite> log;
};

// Rewrites to a fixpoint. Throws PreconditionViolated on a cover that is not a
// TFPCC of g, NonTermination when the rewrite budget
// (n*m + m) runs out or the measure fails to grow.
PreprocessResult preprocess(Cover cover, const Graph& g, PrepMode mode);

// Fixpoint properties. `initial_edges` is the edge count before
// preprocessing; `opt` is checked against when known.
std::vector<Predicate> preprocess_predicates(const Cover& cover, const Graph& g, PrepMode mode,
                                             const std::vector<PiPair>& pairs, int initial_edges,
                                             std::optional<int> opt = std::nullopt);

}  // namespace mist
