#pragma once

#include <optional>
#include <vector>

#include "mist/cover.hpp"
#include "mist/graph.hpp"

namespace mist {

// A spanning tree of some graph, in that graph's id space.
struct TreeResult {
  EdgeSet edges;
  int weight = 0;    // number of vertices with tree degree >= 2
  VertexSet leaves;  // vertices with tree degree <= 1

  bool operator==(const TreeResult&) const = default;
};

// Builds a TreeResult over the alive vertices of g from a tree edge list.
TreeResult make_tree_result(const Graph& g, EdgeSet edges);

// Edges drawn from g, |V|-1 of them, connected, weight/leaves consistent.
bool is_spanning_tree(const Graph& g, const TreeResult& t);

struct OracleLimits {
  int tree_cap = 12;      // opt_spanning_tree
  int hamiltonian_cap = 10;
  int cover_cap = 16;     // max_tfpcc_exact
};

// Maximum-weight spanning tree by dynamic programming over vertex subsets
// (rooted subtrees keyed by root degree). Throws DisconnectedInput or
// SizeCapExceeded.
TreeResult opt_spanning_tree(const Graph& g, const OracleLimits& limits = {});

// Path through every alive vertex of g from `from` to `to`, by backtracking
// with neighbors tried in increasing id order.
std::optional<std::vector<Vertex>> hamiltonian_path_between(const Graph& g, Vertex from, Vertex to,
                                                            const OracleLimits& limits = {});

// Maximum triangle-free path-cycle cover with degree <= 1 on forced_leaves.
// Branch and bound over edges.
Cover max_tfpcc_exact(const Graph& g, const VertexSet& forced_leaves = {}, const OracleLimits& limits = {});

// Pluggable maximum-TFPCC solver; the exact solver is the only production
// implementation.
class TfpccSolver {
 public:
  virtual ~TfpccSolver() = default;
  virtual Cover solve(const Graph& g, const VertexSet& forced_leaves) const = 0;
};

class ExactTfpccSolver : public TfpccSolver {
 public:
  explicit ExactTfpccSolver(OracleLimits limits = {}) : limits_(limits) {}
  Cover solve(const Graph& g, const VertexSet& forced_leaves) const override {
    return max_tfpcc_exact(g, forced_leaves, limits_);
  }

 private:
  OracleLimits limits_;
};

// Roots t at its smallest non-leaf and keeps, for each non-leaf, only the
// edge to its smallest child. |E| >= w(t) and leaves of t keep degree <= 1.
Cover path_cover_from_tree(const TreeResult& t, const Graph& g);

}  // namespace mist
