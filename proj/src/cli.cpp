#include "mist/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mist/errors.hpp"
#include "mist/generate.hpp"
#include "mist/io.hpp"
#include "mist/pipeline.hpp"
#include "mist/verify.hpp"

namespace mist {

namespace {

using Json = nlohmann::ordered_json;

Json predicates_json(const std::vector<Predicate>& ps) {
  Json arr = Json::array();
  for (const Predicate& p : ps) arr.push_back({{"name", p.name}, {"passed", p.passed}, {"detail", p.detail}});
  return arr;
}

Json verification_json(const VerificationReport& v) {
  Json j;
  j["opt"] = v.opt ? Json(*v.opt) : Json(nullptr);
  j["ratio_num"] = v.ratio_num;
  j["ratio_den"] = v.ratio_den;
  j["ratio_ok"] = v.ratio_ok;
  j["passed"] = v.passed();
  j["predicates"] = predicates_json(v.predicates);
  Json steps = Json::array();
  for (const CoverStepVerification& s : v.cover_steps) {
    Json step;
    step["opt"] = s.opt ? Json(*s.opt) : Json(nullptr);
    step["spanning_cycle"] = s.spanning_cycle;
    if (s.stats) {
      const ComponentStats& c = *s.stats;
      step["stats"] = {{"g2", c.g2}, {"g3", c.g3}, {"b2", c.b2}, {"b3", c.b3},
                       {"c4", c.c4}, {"c5", c.c5}, {"p4", c.p4}};
    } else {
      step["stats"] = nullptr;
    }
    step["predicates"] = predicates_json(s.predicates);
    steps.push_back(std::move(step));
  }
  j["cover_steps"] = std::move(steps);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct SolveArgs {
  std::string algo = "refined";
  std::string in;
  bool verify = false;
  bool json = false;
};

int run_solve(const SolveArgs& a, std::ostream& out) {
  const Algorithm algorithm = *parse_algorithm(a.algo);
  const Graph g = parse_graph(read_file(a.in));
  PipelineOptions options;
  options.algorithm = algorithm;
  options.retain_state = a.verify;
  const RunReport report = solve(g, options);
  std::optional<VerificationReport> v;
  if (a.verify) v = verify_run(g, report);

  if (a.json) {
    Json j;
    j["algorithm"] = to_string(algorithm);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["weight"] = report.tree.weight;
    j["upper_bound"] = report.upper_bound;
    Json tree = Json::array();
    for (const Edge& e : report.tree.edges) tree.push_back({e.u + 1, e.v + 1});
    j["tree"] = std::move(tree);
    j["verification"] = v ? verification_json(*v) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "algorithm " << to_string(algorithm) << '\n';
    out << "vertices " << g.vertex_count() << '\n';
    out << "edges " << g.edge_count() << '\n';
    for (const Edge& e : report.tree.edges) out << "t " << e.u + 1 << ' ' << e.v + 1 << '\n';
    out << "weight " << report.tree.weight << '\n';
    out << "upper_bound " << report.upper_bound << '\n';
    if (v) {
      if (v->opt) {
        out << "opt " << *v->opt << '\n';
        out << "ratio " << v->ratio_num << '/' << v->ratio_den << '\n';
        out << "guarantee " << (v->ratio_ok ? "pass" : "fail") << '\n';
      }
      for (const std::string& f : v->failures()) out << "violation " << f << '\n';
      out << "verification " << (v->passed() ? "pass" : "fail") << '\n';
    }
  }
  return v && !v->passed() ? kExitViolation : kExitOk;
}

struct GenArgs {
  std::string family = "gnp";
  int n = 10;
  double p = 0.3;
  std::uint64_t seed = 1;
};

std::string format_p(double p) {
  std::ostringstream s;
  s << p;
  return s.str();
}

int run_gen(const GenArgs& a, std::ostream& out) {
  const Family family = *parse_family(a.family);
  const Graph g = generate(family, a.n, a.p, a.seed);
  out << emit_graph(g, "family=" + a.family + " n=" + std::to_string(a.n) + " p=" + format_p(a.p) +
                           " seed=" + std::to_string(a.seed));
  return kExitOk;
}

struct SweepArgs {
  std::string algo = "refined";
  std::string family = "gnp";
  std::string range = "9..11";
  int count = 10;
  std::uint64_t seed = 1;
  double p = 0.3;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw MistError(ErrorKind::BadParams, "range must look like a..b");
  try {
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw MistError(ErrorKind::BadParams, "range must look like a..b");
  }
}

int run_sweep(const SweepArgs& a, std::ostream& out) {
  const Algorithm algorithm = *parse_algorithm(a.algo);
  const Family family = *parse_family(a.family);
  const auto [lo, hi] = parse_range(a.range);
  out << "instance,n,m,weight,upper_bound,opt,ratio_num,ratio_den,passes\n";
  if (lo > hi) return kExitOk;
  bool all = true;
  for (int i = 0; i < a.count; ++i) {
    const int n = lo + i % (hi - lo + 1);
    const Graph g = generate(family, n, a.p, splitmix64(a.seed + static_cast<std::uint64_t>(i)));
    out << i << ',' << g.vertex_count() << ',' << g.edge_count() << ',';
    try {
      PipelineOptions options;
      options.algorithm = algorithm;
      options.retain_state = true;
      const RunReport report = solve(g, options);
      const VerificationReport v = verify_run(g, report);
      out << report.tree.weight << ',' << report.upper_bound << ',';
      if (v.opt) {
        out << *v.opt << ',' << v.ratio_num << ',' << v.ratio_den << ',';
      } else {
        out << ",,,";
      }
      out << (v.passed() ? "true" : "false") << '\n';
      all = all && v.passed();
    } catch (const MistError&) {
      out << ",,,,,false\n";
      all = false;
    }
  }
  return all ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum internal spanning trees"};
  app.require_subcommand(1);
  const std::vector<std::string> algos{"simple", "refined", "exact"};
  const std::vector<std::string> families{"gnp", "cycle", "path", "theta", "twins"};

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a spanning tree with many internal vertices");
  solve_cmd->add_option("--algo", solve_args.algo)->check(CLI::IsMember(algos));
  solve_cmd->add_option("--in", solve_args.in)->required();
  solve_cmd->add_flag("--verify", solve_args.verify, "Check guarantees and structural properties");
  solve_cmd->add_flag("--json", solve_args.json);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
  gen_cmd->add_option("--family", gen_args.family)->check(CLI::IsMember(families));
  gen_cmd->add_option("--n", gen_args.n)->required();
  gen_cmd->add_option("--p", gen_args.p);
  gen_cmd->add_option("--seed", gen_args.seed);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Solve and verify a batch of generated graphs as CSV");
  sweep_cmd->add_option("--algo", sweep_args.algo)->check(CLI::IsMember(algos));
  sweep_cmd->add_option("--family", sweep_args.family)->check(CLI::IsMember(families));
  sweep_cmd->add_option("--n-range", sweep_args.range);
  sweep_cmd->add_option("--count", sweep_args.count)->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--seed", sweep_args.seed);
  sweep_cmd->add_option("--p", sweep_args.p);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args, out);
    if (*gen_cmd) return run_gen(gen_args, out);
    return run_sweep(sweep_args, out);
  } catch (const ParseError& e) {
    err << solve_args.in << ": " << e.what() << '\n';
  } catch (const MistError& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace mist
