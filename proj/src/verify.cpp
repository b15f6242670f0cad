#include "mist/verify.hpp"

#include <numeric>

#include "mist/errors.hpp"

namespace mist {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::StaleWitness: return "StaleWitness";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    case ErrorKind::BadParams: return "BadParams";
  }
  return "?";
}

bool VerificationReport::passed() const {
  if (!ratio_ok || !all_passed(predicates)) return false;
  for (const CoverStepVerification& s : cover_steps)
    if (!all_passed(s.predicates)) return false;
  return true;
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const Predicate& p : predicates)
    if (!p.passed) out.push_back("run: " + p.name + " (" + p.detail + ")");
  for (std::size_t i = 0; i < cover_steps.size(); ++i)
    for (const Predicate& p : cover_steps[i].predicates)
      if (!p.passed) out.push_back("cover step " + std::to_string(i) + ": " + p.name + " (" + p.detail + ")");
  return out;
}

bool meets_guarantee(Algorithm a, int weight, int opt) {
  switch (a) {
    case Algorithm::Simple: return 4 * weight >= 3 * opt;
    case Algorithm::Refined: return 17 * weight >= 13 * opt;
    case Algorithm::Exact: return weight == opt;
  }
  return false;
}

namespace {

Predicate check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? std::string() : std::move(detail)};
}

CoverStepVerification verify_step(const CoverStepRecord& rec, Algorithm algorithm, const OracleLimits& limits) {
  CoverStepVerification v;
  const Graph& h = rec.graph;
  if (h.vertex_count() <= limits.tree_cap) v.opt = opt_spanning_tree(h, limits).weight;
  auto& ps = v.predicates;
  ps.push_back(check("step tree spans the irreducible graph", is_spanning_tree(h, rec.tree)));
  const bool refined = algorithm == Algorithm::Refined;
  const bool special = is_tfpcc(rec.initial, h, refined ? forced_leaves(rec.pairs) : VertexSet{});
  ps.push_back(check(refined ? "initial cover is special" : "initial cover is a triangle-free path-cycle cover",
                     special));
  if (v.opt)
    ps.push_back(check("initial cover has at least opt edges", rec.initial.edge_count() >= *v.opt,
                       std::to_string(rec.initial.edge_count()) + " < " + std::to_string(*v.opt)));
  const Cover& c = rec.preprocessed.cover;
  for (Predicate& p : preprocess_predicates(c, h, refined ? PrepMode::Refined : PrepMode::Simple, rec.pairs,
                                            rec.initial.edge_count(), v.opt))
    ps.push_back(std::move(p));
  if (!refined) {
    ps.push_back(check("tree keeps three quarters of the cover edges", 4 * rec.tree.weight >= 3 * c.edge_count(),
                       std::to_string(rec.tree.weight) + " vs " + std::to_string(c.edge_count())));
    return v;
  }
  if (!rec.stages) return v;
  const StageState& st = *rec.stages;
  v.spanning_cycle = st.spanning_cycle;
  for (Predicate& p : stage1_predicates(st, h)) ps.push_back(std::move(p));
  for (Predicate& p : stage2_predicates(st, h, rec.tree)) ps.push_back(std::move(p));
  v.stats = compute_stats(st.c2 ? *st.c2 : st.current, st.c0);
  if (v.opt && !st.spanning_cycle)
    for (Predicate& p : stats_predicates(*v.stats, *v.opt)) ps.push_back(std::move(p));
  return v;
}

}  // namespace

VerificationReport verify_run(const Graph& g, const RunReport& report, const OracleLimits& limits) {
  VerificationReport out;
  const TreeResult& t = report.tree;
  out.predicates.push_back(check("output spans the input", is_spanning_tree(g, t)));
  out.predicates.push_back(check("upper bound is at least the tree weight", report.upper_bound >= t.weight,
                                 std::to_string(report.upper_bound) + " < " + std::to_string(t.weight)));
  if (g.vertex_count() <= limits.tree_cap) {
    const int opt = opt_spanning_tree(g, limits).weight;
    out.opt = opt;
    out.predicates.push_back(check("upper bound is at least opt", report.upper_bound >= opt,
                                   std::to_string(report.upper_bound) + " < " + std::to_string(opt)));
    const int d = std::gcd(t.weight, opt);
    out.ratio_num = d == 0 ? 1 : t.weight / d;
    out.ratio_den = d == 0 ? 1 : opt / d;
    out.ratio_ok = meets_guarantee(report.algorithm, t.weight, opt);
  }
  for (const CoverStepRecord& rec : report.cover_steps)
    out.cover_steps.push_back(verify_step(rec, report.algorithm, limits));
  return out;
}

}  // namespace mist
