#pragma once

#include <vector>

#include "mist/cover.hpp"
#include "mist/exact.hpp"
#include "mist/graph.hpp"
#include "mist/reduction.hpp"

namespace mist {

// Two degree-2 twins u1 < u3 with common neighborhood {u2, u4}, u2 < u4.
struct PiPair {
  Vertex u1 = -1;
  Vertex u3 = -1;
  Vertex u2 = -1;
  Vertex u4 = -1;
  EdgeSet supports;  // the four edges incident to u1 or u3

  bool operator==(const PiPair&) const = default;
};

struct PiOptions {
  // Asserts |V| >= 9, no three twins and boundary degree >= 3.
  bool check_preconditions = true;
  // Additionally asserts that no refined reduction applies. Costly.
  bool check_irreducible = false;
  ReductionOptions reduction;
};

// Throws PreconditionViolated when enabled checks fail.
std::vector<PiPair> compute_pi_pairs(const Graph& g, const PiOptions& options = {});

// Plain twin scan without any precondition checks.
std::vector<PiPair> find_twin_pairs(const Graph& g);

VertexSet forced_leaves(const std::vector<PiPair>& pairs);

struct AugmentedGraph {
  Graph graph;
  std::vector<Vertex> pendant;  // pendant[i] hangs off pairs[i].u1
};

AugmentedGraph build_augmented_graph(const Graph& g, const std::vector<PiPair>& pairs);

enum class PreferredRoute { ForcedLeaves, Augmented };

// Maximum TFPCC among those with degree <= 1 at every pair's u1.
Cover preferred_tfpcc(const Graph& g, const std::vector<PiPair>& pairs, const TfpccSolver& solver,
                      PreferredRoute route = PreferredRoute::ForcedLeaves);
Cover preferred_tfpcc(const Graph& g, const OracleLimits& limits = {});

}  // namespace mist
