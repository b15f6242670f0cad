#include "mist/pipeline.hpp"

#include "mist/errors.hpp"

namespace mist {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Simple: return "simple";
    case Algorithm::Refined: return "refined";
    case Algorithm::Exact: return "exact";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "simple") return Algorithm::Simple;
  if (name == "refined") return Algorithm::Refined;
  if (name == "exact") return Algorithm::Exact;
  return std::nullopt;
}

namespace {

struct LeafSolution {
  TreeResult tree;
  int upper_bound = 0;
};

LeafSolution solve_by_cover(const Graph& h, const PipelineOptions& options, const TfpccSolver& solver,
                            RunReport& report) {
  CoverStepRecord rec;
  LeafSolution out;
  if (options.algorithm == Algorithm::Simple) {
    rec.initial = solver.solve(h, {});
    rec.preprocessed = preprocess(rec.initial, h, PrepMode::Simple);
    out.tree = build_tree_simple(rec.preprocessed.cover, h);
  } else {
    PiOptions pi;
    pi.reduction = options.reduction;
    rec.pairs = compute_pi_pairs(h, pi);
    rec.initial = preferred_tfpcc(h, rec.pairs, solver);
    rec.preprocessed = preprocess(rec.initial, h, PrepMode::Refined);
    StageState state(rec.preprocessed.cover);
    out.tree = build_tree_refined(state, h);
    if (options.retain_state) rec.stages = std::move(state);
  }
  out.upper_bound = rec.preprocessed.cover.edge_count();
  ++report.cover_leaves;
  if (options.retain_state) {
    rec.graph = h;
    rec.tree = out.tree;
    report.cover_steps.push_back(std::move(rec));
  }
  return out;
}

int compose_bound(const ReductionTrace& trace, int node, const std::vector<int>& leaf_bounds) {
  const TraceNode& n = trace.nodes[node];
  if (n.leaf_index >= 0) return leaf_bounds[n.leaf_index];
  int total = n.weak->constant;
  for (int child : n.children) total += compose_bound(trace, child, leaf_bounds);
  return total;
}

}  // namespace

RunReport solve(const Graph& g, const PipelineOptions& options) {
  if (g.vertex_count() == 0 || !is_connected(g))
    throw MistError(ErrorKind::DisconnectedInput, "input graph must be connected and non-empty");
  RunReport report;
  report.algorithm = options.algorithm;
  const OracleLimits& limits = options.reduction.limits;
  if (options.algorithm == Algorithm::Exact) {
    report.tree = opt_spanning_tree(g, limits);
    report.upper_bound = report.tree.weight;
    report.exact_leaves = 1;
    return report;
  }

  const ExactTfpccSolver default_solver(limits);
  const TfpccSolver& solver = options.solver ? *options.solver : default_solver;
  const RuleSet rules = options.algorithm == Algorithm::Simple ? RuleSet::simple() : RuleSet::refined();
  ReductionResult reduced = reduce_to_fixpoint(g, rules, options.reduction);

  std::vector<TreeResult> leaf_trees;
  std::vector<int> leaf_bounds;
  for (const Graph& h : reduced.irreducible) {
    if (h.vertex_count() <= options.base_case_max) {
      leaf_trees.push_back(opt_spanning_tree(h, limits));
      leaf_bounds.push_back(leaf_trees.back().weight);
      ++report.exact_leaves;
    } else {
      LeafSolution s = solve_by_cover(h, options, solver, report);
      leaf_trees.push_back(std::move(s.tree));
      leaf_bounds.push_back(s.upper_bound);
    }
  }
  report.tree = lift_all(reduced.trace, leaf_trees);
  report.upper_bound = compose_bound(reduced.trace, 0, leaf_bounds);
  if (!is_spanning_tree(g, report.tree))
    throw MistError(ErrorKind::InternalInvariant, "lifted tree does not span the input");
  if (options.retain_state) report.trace = std::move(reduced.trace);
  return report;
}

TreeResult solve_simple(const Graph& g) {
  PipelineOptions o;
  o.algorithm = Algorithm::Simple;
  return solve(g, o).tree;
}

TreeResult solve_refined(const Graph& g) {
  PipelineOptions o;
  o.algorithm = Algorithm::Refined;
  return solve(g, o).tree;
}

}  // namespace mist
