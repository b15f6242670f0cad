#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mist/cover.hpp"
#include "mist/exact.hpp"
#include "mist/graph.hpp"
#include "mist/predicate.hpp"

namespace mist {

// ---- simple transform ----

// One link per path component of length 1..3: the lowest graph edge from an
// endpoint of the path to a vertex outside it. Throws InternalInvariant when a
// short path has none or the links would close a cycle.
EdgeSet short_path_links(const Cover& cover, const Graph& g);

// Cover plus links, then: merge adjacent cycle pairs, open every remaining
// cycle towards another component, join components.
TreeResult build_tree_simple(const Cover& cover, const Graph& g);

// ---- refined transform ----

enum class Classification { GoodC2, GoodC3, Bad };

const char* to_string(Classification c);

struct ComponentInfo {
  int id = 0;
  ComponentKind kind = ComponentKind::Path;
  int size = 0;
  int length = 0;  // edge count
  int b = 0;       // frozen initial-cover edges inside the component
  int w = 0;
  int leaves = 0;
  Classification classification = Classification::Bad;

  bool good() const { return classification != Classification::Bad; }
};

// b, w and leaf counts decide the class; cycles are always bad.
Classification classify(ComponentKind kind, int b, int w, int leaves);

// Per-component b counts of `initial` edges over the components of d.
std::vector<int> inside_counts(const Cover& initial, const Decomposition& d);

ComponentInfo classify_component(const Component& comp, const Cover& current, int b);
std::vector<ComponentInfo> classify_all(const Cover& current, const Decomposition& d, const Cover& initial);

enum class StageOp { Op15, Op16, Op17, Op18, Op19, Op20, Op21, Op22, Op23 };

const char* to_string(StageOp op);

struct StageOpRecord {
  StageOp op = StageOp::Op15;
  EdgeSet removed;
  EdgeSet added;
  Vertex anchor = -1;  // a vertex of the component the operation produced
  Classification result = Classification::Bad;
};

struct StageState {
  Cover c0;  // frozen at the start of stage 1
  Cover current;
  std::optional<Cover> c1;
  std::optional<Cover> c2;
  std::vector<std::pair<int, int>> gamma;        // (P, Q) component ids of c0
  std::vector<std::pair<int, int>> gamma_prime;  // one pair per P
  EdgeSet stage1_edges;
  std::vector<StageOpRecord> ops;
  std::vector<std::string> contract_violations;
  bool spanning_cycle = false;  // c2 was one cycle through every vertex

  explicit StageState(const Cover& preprocessed) : c0(preprocessed), current(preprocessed) {}
};

void stage1_connect(StageState& state, const Graph& g);

// Applies Ops 15-23 until none fits. Throws NonTermination past 4n + 16 steps.
void stage2_fixpoint(StageState& state, const Graph& g);

// Opens cycles and joins components into a spanning tree.
TreeResult stage3_finish(StageState& state, const Graph& g);

// Stages 1-3 in order.
TreeResult build_tree_refined(StageState& state, const Graph& g);

struct ComponentStats {
  int g2 = 0, g3 = 0, b2 = 0, b3 = 0, c4 = 0, c5 = 0, p4 = 0;

  bool operator==(const ComponentStats&) const = default;
};

ComponentStats compute_stats(const Cover& c2, const Cover& c0);

// Checks on the first-stage forest: attached trees meet C2 and the remaining
// bad components have the expected shapes.
std::vector<Predicate> stage1_predicates(const StageState& state, const Graph& g);

// Structural checks on c2 and the weight inequality against the final tree.
std::vector<Predicate> stage2_predicates(const StageState& state, const Graph& g, const TreeResult& tree);

// Counter bounds against a known optimum.
std::vector<Predicate> stats_predicates(const ComponentStats& s, int opt);

}  // namespace mist
