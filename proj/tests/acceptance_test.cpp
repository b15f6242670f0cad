// One line per acceptance criterion; exit status is non-zero if any fails.
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mist/cli.hpp"
#include "mist/errors.hpp"
#include "mist/exact.hpp"
#include "mist/generate.hpp"
#include "mist/io.hpp"
#include "mist/pipeline.hpp"
#include "mist/preprocess.hpp"
#include "mist/reduction.hpp"
#include "mist/tree_builder.hpp"
#include "test_support.hpp"

using namespace mist;
using mist::testing::brute_opt;

namespace {

struct Instance {
  std::string name;
  Graph g;
  int opt = 0;
};

struct Fraction {
  int num = 1, den = 1;
  void take_min(int a, int b) {
    if (b == 0) return;
    if (static_cast<long>(a) * den < static_cast<long>(num) * b) {
      const int d = std::gcd(a, b);
      num = a / d;
      den = b / d;
    }
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct Line {
  int id;
  bool ok;
  std::string text;
};

std::vector<Line> lines;

void report(int id, bool ok, const std::string& text) {
  lines.push_back({id, ok, text});
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " " << text << std::endl;
}

std::vector<Instance> build_instances(int& oracle_mismatches) {
  std::vector<Instance> out;
  for (int n = 1; n <= 7; ++n) {
    int k = 0;
    for (Graph& g : connected_graphs(n)) {
      Instance in{"iso n=" + std::to_string(n) + " #" + std::to_string(k++), std::move(g), 0};
      in.opt = brute_opt(in.g);
      if (opt_spanning_tree(in.g).weight != in.opt) ++oracle_mismatches;
      out.push_back(std::move(in));
    }
  }
  for (int i = 0; i < 2000; ++i) {
    std::mt19937_64 rng(splitmix64(1000 + static_cast<std::uint64_t>(i)));
    const int n = 8 + i % 5;
    const double p = 0.25 + 0.20 * uniform_unit(rng);
    Instance in{"gnp #" + std::to_string(i), random_connected_gnp(n, p, rng), 0};
    in.opt = opt_spanning_tree(in.g).weight;
    // cross-check the Hamiltonian case against a separate search
    bool ham = false;
    OracleLimits wide;
    wide.hamiltonian_cap = 12;
    const auto vs = in.g.vertices();
    for (std::size_t a = 0; a < vs.size() && !ham; ++a)
      for (std::size_t b = a + 1; b < vs.size() && !ham; ++b)
        ham = hamiltonian_path_between(in.g, vs[a], vs[b], wide).has_value();
    if (ham != (in.opt == n - 2)) ++oracle_mismatches;
    out.push_back(std::move(in));
  }
  // targeted: twin pairs and theta graphs exercise the refined-only rules
  for (int i = 0; i < 200; ++i) {
    const int n = 9 + i % 4;
    Instance in{"twins #" + std::to_string(i), generate(Family::Twins, n, 0.5, splitmix64(5000 + i)), 0};
    in.opt = opt_spanning_tree(in.g).weight;
    out.push_back(std::move(in));
  }
  for (int n = 4; n <= 12; ++n) {
    Instance in{"theta n=" + std::to_string(n), generate(Family::Theta, n, 0, 1), 0};
    in.opt = opt_spanning_tree(in.g).weight;
    out.push_back(std::move(in));
  }
  return out;
}

std::string first_failure(const std::vector<Predicate>& ps) {
  for (const Predicate& p : ps)
    if (!p.passed) return p.name + " (" + p.detail + ")";
  return {};
}

struct SafetyTally {
  std::map<std::string, int> fired;
  int checked = 0;
  int failures = 0;
  std::string first;
  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  std::string summary() const {
    std::string s;
    for (const auto& [k, v] : fired) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s;
  }
};

void check_safety(const Instance& in, const RuleSet& rules, SafetyTally& strong, SafetyTally& weak) {
  const ReductionResult rr = reduce_to_fixpoint(in.g, rules);
  for (const TraceNode& node : rr.trace.nodes) {
    const Graph* before = &node.input;
    for (const StrongStep& s : node.strong) {
      if (before->vertex_count() <= 9) {
        ++strong.checked;
        ++strong.fired[to_string(s.reduction.kind)];
        const int a = opt_spanning_tree(*before).weight;
        const int b = opt_spanning_tree(s.after).weight;
        if (a != b)
          strong.fail(in.name + ": " + to_string(s.reduction.kind) + " changed opt " + std::to_string(a) + " -> " +
                      std::to_string(b));
      }
      before = &s.after;
    }
    if (!node.weak) continue;
    const Graph& g = node.reduced();
    if (g.vertex_count() > 9) continue;
    ++weak.checked;
    ++weak.fired[to_string(node.weak->kind)];
    const int opt = opt_spanning_tree(g).weight;
    std::vector<TreeResult> subtrees;
    int sum = node.weak->constant;
    for (int child : node.children) {
      subtrees.push_back(opt_spanning_tree(rr.trace.nodes[child].input));
      sum += subtrees.back().weight;
    }
    if (sum != opt)
      weak.fail(in.name + ": " + to_string(node.weak->kind) + " sum " + std::to_string(sum) + " vs opt " +
                std::to_string(opt));
    const TreeResult lifted = lift_tree(g, *node.weak, subtrees);
    if (!is_spanning_tree(g, lifted) || lifted.weight != opt)
      weak.fail(in.name + ": " + to_string(node.weak->kind) + " lift weight " + std::to_string(lifted.weight) +
                " vs opt " + std::to_string(opt));
  }
}

std::string cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str() + "|" + err.str();
}

}  // namespace

int main() {
  int oracle_mismatches = 0;
  const std::vector<Instance> instances = build_instances(oracle_mismatches);
  std::cout << "instances: " << instances.size() << " (oracle cross-check mismatches: " << oracle_mismatches << ")"
            << std::endl;

  // 1, 3, 7, 8: refined runs
  int c1_fail = 0, c3_fail = 0, c3_steps = 0, refined_steps = 0, c7_fail = 0, c8_fail = 0, c8_steps = 0, spanning_cycles = 0;
  std::string c1_first, c3_first, c7_first, c8_first;
  Fraction worst_refined;
  for (const Instance& in : instances) {
    PipelineOptions o;
    o.algorithm = Algorithm::Refined;
    o.retain_state = true;
    RunReport r;
    try {
      r = solve(in.g, o);
    } catch (const MistError& e) {
      if (c1_fail++ == 0) c1_first = in.name + ": " + e.what();
      continue;
    }
    const int w = r.tree.weight;
    worst_refined.take_min(w, in.opt);
    if (!is_spanning_tree(in.g, r.tree) || 17 * w < 13 * in.opt || r.upper_bound < in.opt)
      if (c1_fail++ == 0) c1_first = in.name + ": w=" + std::to_string(w) + " opt=" + std::to_string(in.opt);
    for (const CoverStepRecord& rec : r.cover_steps) {
      const int opt = opt_spanning_tree(rec.graph).weight;
      ++c3_steps;
      ++refined_steps;
      if (rec.initial.edge_count() < opt)
        if (c3_fail++ == 0) c3_first = in.name;
      std::vector<Predicate> ps = preprocess_predicates(rec.preprocessed.cover, rec.graph, PrepMode::Refined,
                                                        rec.pairs, rec.initial.edge_count(), opt);
      if (!rec.stages) {
        if (c7_fail++ == 0) c7_first = in.name + ": no stage state";
        continue;
      }
      const StageState& st = *rec.stages;
      for (Predicate& p : stage1_predicates(st, rec.graph)) ps.push_back(std::move(p));
      for (Predicate& p : stage2_predicates(st, rec.graph, rec.tree)) ps.push_back(std::move(p));
      if (!all_passed(ps))
        if (c7_fail++ == 0) c7_first = in.name + ": " + first_failure(ps);
      if (st.spanning_cycle) {
        ++spanning_cycles;
        continue;
      }
      ++c8_steps;
      const auto sp = stats_predicates(compute_stats(st.c2 ? *st.c2 : st.current, st.c0), opt);
      if (!all_passed(sp))
        if (c8_fail++ == 0) c8_first = in.name + ": " + first_failure(sp);
    }
  }
  report(1, c1_fail == 0 && oracle_mismatches == 0,
         "refined 17w >= 13opt on " + std::to_string(instances.size()) + " instances, worst ratio " +
             worst_refined.str() + (c1_fail ? ", first failure " + c1_first : ""));

  // 2: simple runs
  int c2_fail = 0, c2_steps = 0;
  std::string c2_first;
  Fraction worst_simple;
  for (const Instance& in : instances) {
    PipelineOptions o;
    o.algorithm = Algorithm::Simple;
    o.retain_state = true;
    RunReport r;
    try {
      r = solve(in.g, o);
    } catch (const MistError& e) {
      if (c2_fail++ == 0) c2_first = in.name + ": " + e.what();
      continue;
    }
    const int w = r.tree.weight;
    worst_simple.take_min(w, in.opt);
    bool ok = is_spanning_tree(in.g, r.tree) && 4 * w >= 3 * in.opt && 4 * w >= 3 * r.upper_bound;
    for (const CoverStepRecord& rec : r.cover_steps) {
      ++c2_steps;
      const int opt = opt_spanning_tree(rec.graph).weight;
      ok = ok && 4 * rec.tree.weight >= 3 * rec.preprocessed.cover.edge_count();
      ok = ok && all_passed(preprocess_predicates(rec.preprocessed.cover, rec.graph, PrepMode::Simple, rec.pairs,
                                                  rec.initial.edge_count(), opt));
      if (rec.initial.edge_count() < opt)
        if (c3_fail++ == 0) c3_first = in.name + " (simple)";
      ++c3_steps;
    }
    if (!ok)
      if (c2_fail++ == 0) c2_first = in.name + ": w=" + std::to_string(w) + " opt=" + std::to_string(in.opt);
  }
  report(2, c2_fail == 0,
         "simple 4w >= 3opt and 4w >= 3|E(cover)| on " + std::to_string(instances.size()) + " instances (" +
             std::to_string(c2_steps) + " cover steps), worst ratio " + worst_simple.str() +
             (c2_fail ? ", first failure " + c2_first : ""));
  report(3, c3_fail == 0 && c3_steps > 0,
         "|E(cover)| >= opt on " + std::to_string(c3_steps) + " cover steps" +
             (c3_fail ? ", first failure " + c3_first : ""));

  // 4, 5: reduction safety on small graphs
  SafetyTally strong, weak;
  for (const Instance& in : instances) {
    if (in.g.vertex_count() > 9) continue;
    check_safety(in, RuleSet::simple(), strong, weak);
    check_safety(in, RuleSet::refined(), strong, weak);
  }
  report(4, strong.failures == 0 && strong.checked > 0,
         "opt unchanged by " + std::to_string(strong.checked) + " strong firings [" + strong.summary() + "]" +
             (strong.failures ? ", first failure " + strong.first : ""));
  report(5, weak.failures == 0 && weak.checked > 0,
         "opt = sum + c and exact lift on " + std::to_string(weak.checked) + " weak firings [" + weak.summary() +
             "]" + (weak.failures ? ", first failure " + weak.first : ""));

  // 6: path cover of random trees
  int c6_fail = 0;
  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(splitmix64(9000 + static_cast<std::uint64_t>(i)));
    const int n = 1 + uniform_below(rng, 50);
    const Graph t = random_tree(n, rng);
    const TreeResult tr = make_tree_result(t, t.edges());
    const Cover p = path_cover_from_tree(tr, t);
    bool ok = p.edge_count() >= tr.weight && is_tfpcc(p, t);
    for (Vertex v : t.vertices())
      if (t.degree(v) == 1 && p.degree(v) > 1) ok = false;
    if (!ok) ++c6_fail;
  }
  report(6, c6_fail == 0, "path cover of 1000 random trees (n <= 50), failures " + std::to_string(c6_fail));

  report(7, c7_fail == 0,
         "preprocessing and stage-2 predicates on " + std::to_string(refined_steps) + " cover steps (" +
             std::to_string(spanning_cycles) + " spanning-cycle steps)" +
             (c7_fail ? ", first failure " + c7_first : ""));
  report(8, c8_fail == 0,
         "counter bounds vs opt on " + std::to_string(c8_steps) + " refined cover steps (" +
             std::to_string(spanning_cycles) + " spanning-cycle steps have no counters)" +
             (c8_fail ? ", first failure " + c8_first : ""));

  // 9: determinism through the command layer
  const std::string path = "acceptance_gnp.txt";
  int code = 0;
  const std::string file = cli({"mist", "gen", "--family", "gnp", "--n", "11", "--p", "0.35", "--seed", "42"}, code);
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    const std::string body = file.substr(0, file.find('|'));
    std::fwrite(body.data(), 1, body.size(), f);
    std::fclose(f);
  }
  const std::vector<std::vector<std::string>> commands = {
      {"mist", "gen", "--family", "gnp", "--n", "11", "--p", "0.35", "--seed", "42"},
      {"mist", "gen", "--family", "twins", "--n", "10", "--seed", "3"},
      {"mist", "gen", "--family", "theta", "--n", "9"},
      {"mist", "solve", "--algo", "refined", "--in", path, "--verify", "--json"},
      {"mist", "solve", "--algo", "simple", "--in", path, "--verify"},
      {"mist", "solve", "--algo", "exact", "--in", path},
      {"mist", "sweep", "--algo", "refined", "--n-range", "9..12", "--count", "30", "--seed", "5"},
      {"mist", "sweep", "--algo", "simple", "--family", "twins", "--n-range", "9..12", "--count", "30", "--seed", "6"},
  };
  int c9_fail = 0;
  for (const auto& cmd : commands) {
    int c1 = 0, c2 = 0;
    const std::string a = cli(cmd, c1);
    const std::string b = cli(cmd, c2);
    if (a != b || c1 != c2 || c1 != kExitOk) ++c9_fail;
  }
  std::remove(path.c_str());
  report(9, c9_fail == 0,
         std::to_string(commands.size()) + " commands run twice, mismatches or errors " + std::to_string(c9_fail));

  return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.ok; }) ? 0 : 1;
}
