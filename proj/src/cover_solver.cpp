#include "mist/cover_solver.hpp"

#include <algorithm>
#include <map>

#include "mist/errors.hpp"

namespace mist {

std::vector<PiPair> find_twin_pairs(const Graph& g) {
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> groups;
  for (Vertex v : g.vertices())
    if (g.degree(v) == 2) groups[{g.neighbors(v)[0], g.neighbors(v)[1]}].push_back(v);
  std::vector<PiPair> pairs;
  for (const auto& [boundary, twins] : groups) {
    for (std::size_t i = 0; i < twins.size(); ++i) {
      for (std::size_t j = i + 1; j < twins.size(); ++j) {
        PiPair p{twins[i], twins[j], boundary.first, boundary.second, {}};
        p.supports = {make_edge(p.u1, p.u2), make_edge(p.u1, p.u4), make_edge(p.u3, p.u2), make_edge(p.u3, p.u4)};
        std::sort(p.supports.begin(), p.supports.end());
        pairs.push_back(std::move(p));
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const PiPair& a, const PiPair& b) {
    return std::pair{a.u1, a.u3} < std::pair{b.u1, b.u3};
  });
  return pairs;
}

std::vector<PiPair> compute_pi_pairs(const Graph& g, const PiOptions& options) {
  auto fail = [](const std::string& what) { throw MistError(ErrorKind::PreconditionViolated, what); };
  if (options.check_preconditions) {
    if (g.vertex_count() < 9) fail("twin pairs need at least 9 vertices, got " + std::to_string(g.vertex_count()));
    if (options.check_irreducible) {
      if (find_strong_reduction(g, RuleSet::refined(), options.reduction) ||
          find_weak_reduction(g, RuleSet::refined(), options.reduction))
        fail("graph is still reducible");
    }
  }
  std::vector<PiPair> pairs = find_twin_pairs(g);
  if (options.check_preconditions) {
    VertexSet seen;
    for (const PiPair& p : pairs) {
      if (contains(seen, p.u1) || contains(seen, p.u3))
        fail("vertex " + std::to_string(p.u1) + " has more than one twin");
      seen.insert(std::lower_bound(seen.begin(), seen.end(), p.u1), p.u1);
      seen.insert(std::lower_bound(seen.begin(), seen.end(), p.u3), p.u3);
      if (g.degree(p.u2) < 3 || g.degree(p.u4) < 3)
        fail("boundary point of twins " + std::to_string(p.u1) + "," + std::to_string(p.u3) + " has degree < 3");
    }
  }
  return pairs;
}

VertexSet forced_leaves(const std::vector<PiPair>& pairs) {
  VertexSet out;
  for (const PiPair& p : pairs) out.push_back(p.u1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AugmentedGraph build_augmented_graph(const Graph& g, const std::vector<PiPair>& pairs) {
  AugmentedGraph out{g, {}};
  for (const PiPair& p : pairs) {
    const Vertex x = out.graph.add_vertex();
    out.graph.add_edge(p.u1, x);
    out.pendant.push_back(x);
  }
  return out;
}

namespace {

Cover preferred_by_augmentation(const Graph& g, const std::vector<PiPair>& pairs, const TfpccSolver& solver) {
  const AugmentedGraph aug = build_augmented_graph(g, pairs);
  Cover c = solver.solve(aug.graph, {});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Vertex x = aug.pendant[i];
    const Vertex u1 = pairs[i].u1;
    if (c.degree(x) == 1) continue;
    if (c.degree(u1) != 2)
      throw MistError(ErrorKind::InternalInvariant, "augmented cover is not maximum at " + std::to_string(u1));
    const int before = c.edge_count();
    c.remove_edge(u1, c.neighbors(u1)[0]);
    c.add_edge(u1, x);
    if (c.edge_count() != before || !is_tfpcc(c, aug.graph))
      throw MistError(ErrorKind::InternalInvariant, "pendant repair broke the cover");
  }
  EdgeSet kept;
  for (const Edge& e : c.edges())
    if (e.v < g.id_bound()) kept.push_back(e);
  return Cover::from_edges(g, kept);
}

}  // namespace

Cover preferred_tfpcc(const Graph& g, const std::vector<PiPair>& pairs, const TfpccSolver& solver,
                      PreferredRoute route) {
  Cover c = route == PreferredRoute::ForcedLeaves ? solver.solve(g, forced_leaves(pairs))
                                                  : preferred_by_augmentation(g, pairs, solver);
  if (!is_tfpcc(c, g, forced_leaves(pairs)))
    throw MistError(ErrorKind::InternalInvariant, "preferred cover is not special");
  return c;
}

Cover preferred_tfpcc(const Graph& g, const OracleLimits& limits) {
  if (!is_connected(g)) throw MistError(ErrorKind::DisconnectedInput, "preferred cover needs a connected graph");
  return preferred_tfpcc(g, find_twin_pairs(g), ExactTfpccSolver(limits));
}

}  // namespace mist
