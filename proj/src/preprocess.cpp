#include "mist/preprocess.hpp"

#include <algorithm>
#include <functional>

#include "mist/errors.hpp"
#include "mist/exact.hpp"

namespace mist {

const char* to_string(RewriteKind kind) {
  switch (kind) {
    case RewriteKind::Op5: return "op5";
    case RewriteKind::Op6: return "op6";
    case RewriteKind::Op7: return "op7";
    case RewriteKind::Op12: return "op12";
    case RewriteKind::Op13: return "op13";
    case RewriteKind::Op14: return "op14";
  }
  return "?";
}

namespace {

struct View {
  const Cover& cover;
  const Graph& g;
  Decomposition d;
  std::vector<VertexSet> sorted_members;

  View(const Cover& c, const Graph& host) : cover(c), g(host), d(c.decompose()) {
    for (const Component& comp : d.components) {
      VertexSet s = comp.vertices;
      std::sort(s.begin(), s.end());
      sorted_members.push_back(std::move(s));
    }
  }

  const Component& comp(Vertex v) const { return d.of(v); }
  int comp_id(Vertex v) const { return d.component_of[v]; }
  bool port(Vertex v) const { return is_port(g, sorted_members[comp_id(v)], v); }

  // Endpoints of path components in increasing id order.
  VertexSet path_endpoints() const {
    VertexSet out;
    for (const Component& c : d.components) {
      if (!c.is_path()) continue;
      out.push_back(c.vertices.front());
      if (c.size() > 1) out.push_back(c.vertices.back());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_path_endpoint(Vertex v) const { return comp(v).is_path() && cover.degree(v) <= 1; }
};

EdgeSet path_edges(const std::vector<Vertex>& walk) {
  EdgeSet out;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) out.push_back(make_edge(walk[i], walk[i + 1]));
  std::sort(out.begin(), out.end());
  return out;
}

Edge lower_cover_edge(const Cover& c, Vertex v) { return make_edge(v, c.neighbors(v)[0]); }

std::optional<CoverRewrite> find_op5(const View& view) {
  for (const Component& p : view.d.components) {
    if (!p.is_path() || p.length() < 2 || p.length() > 4) continue;
    if (!is_dead_path(view.g, p)) continue;
    const VertexSet& members = view.sorted_members[p.id];
    const InducedSubgraph sub = induced_subgraph(view.g, members);
    for (Vertex a : members) {
      if (!view.port(a)) continue;
      for (Vertex b : members) {
        if (b == a) continue;
        auto q = hamiltonian_path_between(sub.graph, sub.to_local[a], sub.to_local[b]);
        if (!q) continue;
        std::vector<Vertex> walk;
        for (Vertex x : *q) walk.push_back(sub.to_original[x]);
        const EdgeSet old_edges = path_edges(p.vertices);
        const EdgeSet new_edges = path_edges(walk);
        CoverRewrite r;
        r.kind = RewriteKind::Op5;
        std::set_difference(old_edges.begin(), old_edges.end(), new_edges.begin(), new_edges.end(),
                            std::back_inserter(r.removed));
        std::set_difference(new_edges.begin(), new_edges.end(), old_edges.begin(), old_edges.end(),
                            std::back_inserter(r.added));
        return r;
      }
    }
  }
  return std::nullopt;
}

std::optional<CoverRewrite> find_op6(const View& view) {
  for (Vertex u : view.path_endpoints()) {
    for (Vertex v : view.g.neighbors(u)) {
      if (!view.comp(v).is_cycle()) continue;
      return CoverRewrite{RewriteKind::Op6, {lower_cover_edge(view.cover, v)}, {make_edge(u, v)}};
    }
  }
  return std::nullopt;
}

std::optional<CoverRewrite> find_op7(const View& view) {
  for (Vertex u1 : view.path_endpoints()) {
    const Component& p1 = view.comp(u1);
    for (Vertex u2 : view.g.neighbors(u1)) {
      const Component& p2 = view.comp(u2);
      if (p2.id == p1.id || !p2.is_path() || view.cover.degree(u2) != 2) continue;
      const int len = p2.length();
      const int i = static_cast<int>(std::find(p2.vertices.begin(), p2.vertices.end(), u2) - p2.vertices.begin());
      const int before = std::max(p1.length(), len);
      // Cutting towards the start keeps u2..end with u2; towards the end keeps start..u2.
      struct Option {
        Edge cut;
        int value;
      };
      const Option options[2] = {
          {make_edge(u2, p2.vertices[i - 1]), std::max(p1.length() + 1 + (len - i), i - 1)},
          {make_edge(u2, p2.vertices[i + 1]), std::max(p1.length() + 1 + i, len - i - 1)},
      };
      const Option* best = nullptr;
      for (const Option& o : options) {
        if (o.value <= before) continue;
        if (!best || o.value > best->value || (o.value == best->value && o.cut < best->cut)) best = &o;
      }
      if (best) return CoverRewrite{RewriteKind::Op7, {best->cut}, {make_edge(u1, u2)}};
    }
  }
  return std::nullopt;
}

std::optional<CoverRewrite> find_op12(const View& view) {
  for (const Component& c1 : view.d.components) {
    if (!c1.is_cycle()) continue;
    EdgeSet cycle = path_edges(c1.vertices);
    cycle.push_back(make_edge(c1.vertices.front(), c1.vertices.back()));
    std::sort(cycle.begin(), cycle.end());
    for (const Edge& e1 : cycle) {
      for (auto [u1, v1] : {std::pair{e1.u, e1.v}, std::pair{e1.v, e1.u}}) {
        for (Vertex u2 : view.g.neighbors(u1)) {
          const Component& c2 = view.comp(u2);
          if (c2.id == c1.id || !(c2.is_cycle() || c2.is_path())) continue;
          for (Vertex v2 : view.cover.neighbors(u2)) {
            if (!view.g.has_edge(v1, v2)) continue;
            CoverRewrite r{RewriteKind::Op12, {e1, make_edge(u2, v2)}, {make_edge(u1, u2), make_edge(v1, v2)}};
            std::sort(r.removed.begin(), r.removed.end());
            std::sort(r.added.begin(), r.added.end());
            return r;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<CoverRewrite> find_op13(const View& view) {
  for (Vertex u1 : view.path_endpoints()) {
    for (Vertex u2 : view.g.neighbors(u1)) {
      if (view.comp_id(u2) == view.comp_id(u1) || !view.is_path_endpoint(u2)) continue;
      return CoverRewrite{RewriteKind::Op13, {}, {make_edge(u1, u2)}};
    }
  }
  return std::nullopt;
}

std::optional<CoverRewrite> find_op14(const View& view) {
  for (Vertex x : view.g.vertices()) {
    if (view.cover.degree(x) != 0) continue;
    auto nb = view.g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!view.cover.has_edge(nb[i], nb[j]) || !view.comp(nb[i]).is_path()) continue;
        return CoverRewrite{RewriteKind::Op14, {make_edge(nb[i], nb[j])}, {make_edge(nb[i], x), make_edge(nb[j], x)}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CoverRewrite> find_rewrite(const Cover& cover, const Graph& g, PrepMode mode) {
  const View view(cover, g);
  using Finder = std::optional<CoverRewrite> (*)(const View&);
  static constexpr Finder simple[] = {find_op5, find_op6, find_op7};
  static constexpr Finder refined[] = {find_op12, find_op13, find_op14};
  for (Finder f : simple)
    if (auto r = f(view)) return r;
  if (mode == PrepMode::Refined)
    for (Finder f : refined)
      if (auto r = f(view)) return r;
  return std::nullopt;
}

void apply_rewrite(Cover& cover, const CoverRewrite& r) {
  for (const Edge& e : r.removed) cover.remove_edge(e.u, e.v);
  for (const Edge& e : r.added) cover.add_edge(e.u, e.v);
}

PrepMeasure measure(const Cover& cover, const Graph& g) {
  PrepMeasure m;
  m.edges = cover.edge_count();
  const Decomposition d = cover.decompose();
  m.neg_components = -static_cast<int>(d.components.size());
  for (const Component& c : d.components) {
    if (!c.is_path()) continue;
    m.path_lengths.push_back(c.length());
    if (is_dead_path(g, c)) --m.neg_dead_paths;
  }
  std::sort(m.path_lengths.begin(), m.path_lengths.end(), std::greater<>());
  return m;
}

PreprocessResult preprocess(Cover cover, const Graph& g, PrepMode mode) {
  if (!is_tfpcc(cover, g))
    throw MistError(ErrorKind::PreconditionViolated, "preprocessing needs a triangle-free path-cycle cover");
  PreprocessResult out;
  const long budget = static_cast<long>(g.vertex_count()) * g.edge_count() + g.edge_count();
  PrepMeasure current = measure(cover, g);
  while (auto r = find_rewrite(cover, g, mode)) {
    if (static_cast<long>(out.log.size()) >= budget)
      throw MistError(ErrorKind::NonTermination, "preprocessing exceeded " + std::to_string(budget) + " rewrites");
    apply_rewrite(cover, *r);
    if (!is_tfpcc(cover, g))
      throw MistError(ErrorKind::InternalInvariant, std::string(to_string(r->kind)) + " broke the cover");
    PrepMeasure next = measure(cover, g);
    if (!(next > current))
      throw MistError(ErrorKind::NonTermination, std::string(to_string(r->kind)) + " did not make progress");
    current = std::move(next);
    out.log.push_back(std::move(*r));
  }
  out.cover = std::move(cover);
  return out;
}

std::vector<Predicate> preprocess_predicates(const Cover& cover, const Graph& g, PrepMode mode,
                                             const std::vector<PiPair>& pairs, int initial_edges,
                                             std::optional<int> opt) {
  const View view(cover, g);
  std::vector<Predicate> out;
  auto add = [&out](std::string name) -> Predicate& {
    out.push_back({std::move(name), true, {}});
    return out.back();
  };
  auto fail = [](Predicate& p, std::string detail) {
    if (p.passed) p.detail = std::move(detail);
    p.passed = false;
  };

  {
    Predicate& p = add("cover is a triangle-free path-cycle cover");
    if (!is_tfpcc(cover, g)) fail(p, "invalid cover");
  }
  {
    Predicate& p = add("cover kept its edge count");
    if (cover.edge_count() < initial_edges)
      fail(p, std::to_string(cover.edge_count()) + " < " + std::to_string(initial_edges));
  }
  if (opt) {
    Predicate& p = add("cover has at least opt edges");
    if (cover.edge_count() < *opt) fail(p, std::to_string(cover.edge_count()) + " < opt " + std::to_string(*opt));
  }
  {
    Predicate& p = add("paths of length at most 3 are alive");
    for (const Component& c : view.d.components)
      if (c.is_path() && c.length() <= 3 && is_dead_path(g, c))
        fail(p, "dead path at " + std::to_string(c.vertices.front()));
  }
  {
    Predicate& p = add("port endpoints see internal vertices of long paths");
    for (const Component& c : view.d.components) {
      if (!c.is_path()) continue;
      for (Vertex v : {c.vertices.front(), c.vertices.back()}) {
        for (Vertex u : g.neighbors(v)) {
          if (view.comp_id(u) == c.id) continue;
          const Component& q = view.comp(u);
          if (!q.is_path() || cover.degree(u) != 2 || q.length() < 2 * c.length() + 2)
            fail(p, "endpoint " + std::to_string(v) + " sees " + std::to_string(u));
        }
      }
    }
  }
  if (mode == PrepMode::Refined) {
    {
      Predicate& p = add("twin-pair lower vertices avoid cycles");
      for (const PiPair& pair : pairs)
        if (view.comp(pair.u1).is_cycle()) fail(p, "vertex " + std::to_string(pair.u1) + " on a cycle");
    }
    {
      Predicate& p = add("dead 4-paths end at graph leaves");
      for (const Component& c : view.d.components)
        if (c.is_path() && c.length() == 4 && is_dead_path(g, c) &&
            (g.degree(c.vertices.front()) != 1 || g.degree(c.vertices.back()) != 1))
          fail(p, "dead 4-path at " + std::to_string(c.vertices.front()));
    }
    {
      Predicate& p = add("4-cycles have at least three ports");
      for (const Component& c : view.d.components) {
        if (!c.is_cycle() || c.length() != 4) continue;
        int ports = 0;
        for (Vertex v : c.vertices) ports += view.port(v) ? 1 : 0;
        if (ports < 3) fail(p, "4-cycle at " + std::to_string(c.vertices.front()));
      }
    }
  }
  return out;
}

}  // namespace mist
