#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mist/exact.hpp"
#include "mist/graph.hpp"

namespace mist {

// Reduction rules, numbered as the operations they implement.
enum class RuleKind { Op1, Op2, Op3, Op4, Op8, Op9, Op10, Op11 };

const char* to_string(RuleKind kind);

struct RuleSet {
  bool op1 = false, op2 = false, op3 = false, op4 = false;
  bool op8 = false, op9 = false, op10 = false, op11 = false;

  bool has(RuleKind kind) const;

  // Rules {1,2} strong and {3,4} weak.
  static RuleSet simple();
  // Rules {1,2,8,9,10} strong and {3,4,11} weak.
  static RuleSet refined();
};

struct ReductionOptions {
  int pendant_component_max = 8;  // upper size of the component Op4 replaces
  int path_gadget_max = 6;        // upper size of the component Op10 inspects
  OracleLimits limits;
};

struct StrongReduction {
  RuleKind kind = RuleKind::Op1;
  std::vector<Vertex> witness;
  VertexSet deleted_vertices;
  EdgeSet deleted_edges;
  Vertex reattach_to = -1;  // Op1: the common neighbor of the two leaves
};

struct BridgeSplit {
  Edge bridge;
};

struct PendantReplace {
  Vertex cut_point = -1;
  VertexSet component;
  Vertex pendant = -1;       // id the new pendant vertex receives
  EdgeSet component_tree;    // optimal tree of the component plus its cut point
};

struct DegreeTwoMerge {
  Vertex kept = -1;          // u1, survives as the merged vertex
  Vertex absorbed = -1;      // u2
  Vertex kept_outer = -1;    // u1's other neighbor
  Vertex absorbed_outer = -1;  // u2's other neighbor
};

struct WeakReduction {
  RuleKind kind = RuleKind::Op3;
  int constant = 0;
  std::variant<BridgeSplit, PendantReplace, DegreeTwoMerge> recipe;
};

std::optional<StrongReduction> find_strong_reduction(const Graph& g, const RuleSet& rules,
                                                     const ReductionOptions& options = {});
// Throws StaleWitness when r no longer matches g.
Graph apply_strong_reduction(const Graph& g, const StrongReduction& r);

std::optional<WeakReduction> find_weak_reduction(const Graph& g, const RuleSet& rules,
                                                 const ReductionOptions& options = {});
std::vector<Graph> apply_weak_reduction(const Graph& g, const WeakReduction& r);

// Spanning tree of the graph before a strong reduction from one of the graph after.
TreeResult lift_strong(const Graph& before, const StrongReduction& r, const TreeResult& t);

// Spanning tree of the graph before a weak reduction from trees of the produced graphs.
// Throws ArityMismatch when the subtree count does not match.
TreeResult lift_tree(const Graph& before, const WeakReduction& r, const std::vector<TreeResult>& subtrees);

struct StrongStep {
  StrongReduction reduction;
  Graph after;
};

struct TraceNode {
  Graph input;
  std::vector<StrongStep> strong;
  std::optional<WeakReduction> weak;
  std::vector<int> children;  // node indices, one per graph the weak reduction produced
  int leaf_index = -1;        // index into the irreducible graphs when weak is absent

  const Graph& reduced() const { return strong.empty() ? input : strong.back().after; }
};

struct ReductionTrace {
  std::vector<TraceNode> nodes;  // node 0 is the root
  std::vector<int> leaf_nodes;
};

struct ReductionResult {
  std::vector<Graph> irreducible;
  ReductionTrace trace;
};

// Exhausts strong rules, then applies one weak rule and recurses into each
// produced graph.
ReductionResult reduce_to_fixpoint(const Graph& g, const RuleSet& rules, const ReductionOptions& options = {});

// Reassembles a spanning tree of the traced input from one tree per irreducible graph.
TreeResult lift_all(const ReductionTrace& trace, const std::vector<TreeResult>& leaf_trees);

}  // namespace mist
