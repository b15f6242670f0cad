#include "mist/tree_builder.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "mist/errors.hpp"

namespace mist {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

DisjointSets sets_of(const Cover& c) {
  DisjointSets ds(c.subgraph().id_bound());
  for (const Edge& e : c.edges()) ds.unite(e.u, e.v);
  return ds;
}

// Lower of the two edges at v along a cycle walk.
Edge lower_cycle_edge(const Component& cycle, Vertex v) {
  const auto& w = cycle.vertices;
  const auto n = w.size();
  const auto i = static_cast<std::size_t>(std::find(w.begin(), w.end(), v) - w.begin());
  return std::min(make_edge(v, w[(i + 1) % n]), make_edge(v, w[(i + n - 1) % n]));
}

std::optional<Edge> lowest_escape(const Graph& g, const VertexSet& from, DisjointSets& ds) {
  std::optional<Edge> best;
  for (Vertex u : from)
    for (Vertex v : g.neighbors(u))
      if (ds.find(u) != ds.find(v) && (!best || make_edge(u, v) < *best)) best = make_edge(u, v);
  return best;
}

void join_components(Cover& h, const Graph& g) {
  DisjointSets ds = sets_of(h);
  for (const Edge& e : g.edges())
    if (ds.unite(e.u, e.v)) h.add_edge(e.u, e.v);
}

TreeResult finish(const Cover& h, const Graph& g) {
  TreeResult t = make_tree_result(g, h.edges());
  if (!is_spanning_tree(g, t)) throw MistError(ErrorKind::InternalInvariant, "transform did not yield a spanning tree");
  return t;
}

}  // namespace

EdgeSet short_path_links(const Cover& cover, const Graph& g) {
  const Decomposition d = cover.decompose();
  DisjointSets ds(static_cast<int>(d.components.size()));
  EdgeSet links;
  for (const Component& p : d.components) {
    if (!p.is_path() || p.length() < 1 || p.length() > 3) continue;
    std::optional<Edge> best;
    for (Vertex x : {p.vertices.front(), p.vertices.back()})
      for (Vertex y : g.neighbors(x))
        if (d.component_of[y] != p.id && (!best || make_edge(x, y) < *best)) best = make_edge(x, y);
    if (!best)
      throw MistError(ErrorKind::InternalInvariant, "short path at " + std::to_string(p.vertices.front()) + " is dead");
    if (!ds.unite(d.component_of[best->u], d.component_of[best->v]))
      throw MistError(ErrorKind::InternalInvariant, "short path links close a cycle at " + to_string(*best));
    links.push_back(*best);
  }
  std::sort(links.begin(), links.end());
  return links;
}

TreeResult build_tree_simple(const Cover& cover, const Graph& g) {
  Cover h = cover;
  for (const Edge& e : short_path_links(cover, g)) h.add_edge(e.u, e.v);

  // Merge pairs of adjacent cycles.
  for (bool changed = true; changed;) {
    changed = false;
    const Decomposition d = h.decompose();
    for (const Edge& e : g.edges()) {
      const Component& c1 = d.of(e.u);
      const Component& c2 = d.of(e.v);
      if (c1.id == c2.id || !c1.is_cycle() || !c2.is_cycle()) continue;
      const Edge r1 = lower_cycle_edge(c1, e.u);
      const Edge r2 = lower_cycle_edge(c2, e.v);
      h.remove_edge(r1.u, r1.v);
      h.remove_edge(r2.u, r2.v);
      h.add_edge(e.u, e.v);
      changed = true;
      break;
    }
  }

  // Open each remaining cycle towards another component.
  const Decomposition d = h.decompose();
  DisjointSets ds = sets_of(h);
  for (const Component& c : d.components) {
    if (!c.is_cycle()) continue;
    VertexSet members = c.vertices;
    std::sort(members.begin(), members.end());
    if (c.size() == g.vertex_count()) {
      const Edge r = lower_cycle_edge(c, members.front());
      h.remove_edge(r.u, r.v);
      continue;
    }
    auto e = lowest_escape(g, members, ds);
    if (!e) throw MistError(ErrorKind::InternalInvariant, "cycle at " + std::to_string(members.front()) + " is isolated");
    const Vertex u = contains(members, e->u) ? e->u : e->v;
    const Edge r = lower_cycle_edge(c, u);
    h.remove_edge(r.u, r.v);
    h.add_edge(e->u, e->v);
    ds.unite(e->u, e->v);
  }

  join_components(h, g);
  return finish(h, g);
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::GoodC2: return "good-c2";
    case Classification::GoodC3: return "good-c3";
    case Classification::Bad: return "bad";
  }
  return "?";
}

const char* to_string(StageOp op) {
  static const char* names[] = {"op15", "op16", "op17", "op18", "op19", "op20", "op21", "op22", "op23"};
  return names[static_cast<int>(op)];
}

namespace {

bool meets_c2(int b, int w, int leaves) { return b >= 5 && leaves <= b - 2 && 5 * w >= 4 * b; }
bool meets_c3(int b, int w, int leaves) { return w >= b && b == 4 && leaves == 3; }

}  // namespace

Classification classify(ComponentKind kind, int b, int w, int leaves) {
  if (kind != ComponentKind::Path && kind != ComponentKind::Tree) return Classification::Bad;
  if (meets_c2(b, w, leaves)) return Classification::GoodC2;
  if (meets_c3(b, w, leaves)) return Classification::GoodC3;
  return Classification::Bad;
}

std::vector<int> inside_counts(const Cover& initial, const Decomposition& d) {
  std::vector<int> b(d.components.size(), 0);
  for (const Edge& e : initial.edges())
    if (d.component_of[e.u] == d.component_of[e.v]) ++b[d.component_of[e.u]];
  return b;
}

ComponentInfo classify_component(const Component& comp, const Cover& current, int b) {
  ComponentInfo info;
  info.id = comp.id;
  info.kind = comp.kind;
  info.size = comp.size();
  info.length = comp.length();
  info.b = b;
  info.w = internal_count(current, comp);
  info.leaves = leaf_count(current, comp);
  info.classification = classify(comp.kind, b, info.w, info.leaves);
  return info;
}

std::vector<ComponentInfo> classify_all(const Cover& current, const Decomposition& d, const Cover& initial) {
  const std::vector<int> b = inside_counts(initial, d);
  std::vector<ComponentInfo> out;
  for (const Component& c : d.components) out.push_back(classify_component(c, current, b[c.id]));
  return out;
}

void stage1_connect(StageState& state, const Graph& g) {
  const Decomposition d = state.c0.decompose();
  DisjointSets ds(static_cast<int>(d.components.size()));
  for (const Component& p : d.components) {
    if (!p.is_path() || p.length() < 1) continue;
    std::set<int> targets;
    for (Vertex v : {p.vertices.front(), p.vertices.back()})
      for (Vertex u : g.neighbors(v))
        if (d.component_of[u] != p.id && d.of(u).is_path()) targets.insert(d.component_of[u]);
    if (targets.empty()) continue;
    int chosen = -1;
    for (int q : targets) {
      state.gamma.emplace_back(p.id, q);
      if (chosen < 0 || d.components[q].length() > d.components[chosen].length()) chosen = q;
    }
    state.gamma_prime.emplace_back(p.id, chosen);
    std::optional<Edge> link;
    for (Vertex v : {p.vertices.front(), p.vertices.back()})
      for (Vertex u : g.neighbors(v))
        if (d.component_of[u] == chosen && (!link || make_edge(u, v) < *link)) link = make_edge(u, v);
    if (!ds.unite(p.id, chosen)) {
      state.contract_violations.push_back("stage 1 link " + to_string(*link) + " would close a cycle");
      continue;
    }
    state.current.add_edge(link->u, link->v);
    state.stage1_edges.push_back(*link);
  }
  std::sort(state.stage1_edges.begin(), state.stage1_edges.end());
  state.c1 = state.current;
}

namespace {

struct Snapshot {
  Decomposition d;
  std::vector<ComponentInfo> info;

  Snapshot(const Cover& current, const Cover& c0) : d(current.decompose()), info(classify_all(current, d, c0)) {}

  const Component& comp(Vertex v) const { return d.of(v); }
  const ComponentInfo& of(Vertex v) const { return info[d.component_of[v]]; }
  bool is_tree(Vertex v) const { return comp(v).is_tree(); }
  bool is_cycle(Vertex v) const { return comp(v).is_cycle(); }
  bool same(Vertex a, Vertex b) const { return d.component_of[a] == d.component_of[b]; }

  int bad_count() const {
    return static_cast<int>(std::count_if(info.begin(), info.end(), [](const ComponentInfo& i) { return !i.good(); }));
  }
  int cycle_count() const {
    return static_cast<int>(
        std::count_if(d.components.begin(), d.components.end(), [](const Component& c) { return c.is_cycle(); }));
  }
};

using Found = std::optional<StageOpRecord>;

StageOpRecord record(StageOp op, Vertex anchor) {
  StageOpRecord r;
  r.op = op;
  r.anchor = anchor;
  return r;
}

// Connects v's component to an outside edge ending at v; a cycle gives up its lower edge at v.
void open_at(const Snapshot& s, StageOpRecord& r, Vertex v) {
  if (s.is_cycle(v)) r.removed.push_back(lower_cycle_edge(s.comp(v), v));
}

Found find_op15(const Snapshot& s, const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (s.same(e.u, e.v) || !s.is_cycle(e.u) || !s.is_cycle(e.v)) continue;
    if (s.comp(e.u).length() + s.comp(e.v).length() < 10) continue;
    StageOpRecord r = record(StageOp::Op15, e.u);
    open_at(s, r, e.u);
    open_at(s, r, e.v);
    r.added.push_back(e);
    return r;
  }
  return std::nullopt;
}

template <typename Accept>
Found cycle_to_component(const Snapshot& s, const Graph& g, StageOp op, int min_cycle, Accept accept) {
  for (const Edge& e : g.edges()) {
    for (auto [v, u] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (s.same(u, v) || !s.is_cycle(v) || s.comp(v).length() < min_cycle || !accept(u)) continue;
      StageOpRecord r = record(op, v);
      open_at(s, r, v);
      r.added.push_back(e);
      return r;
    }
  }
  return std::nullopt;
}

Found find_op16(const Snapshot& s, const Graph& g) {
  return cycle_to_component(s, g, StageOp::Op16, 5, [&](Vertex u) { return s.of(u).good(); });
}

Found find_op17(const Snapshot& s, const Graph& g) {
  return cycle_to_component(s, g, StageOp::Op17, 6,
                            [&](Vertex u) { return s.comp(u).is_path() && s.comp(u).length() == 4; });
}

Found find_op18(const Snapshot& s, const Graph& g) {
  for (const Component& p : s.d.components) {
    if (!p.is_path() || p.size() != 1) continue;
    const Vertex u = p.vertices.front();
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (s.same(nb[i], nb[j]) || !s.is_tree(nb[i]) || !s.is_tree(nb[j])) continue;
        StageOpRecord r = record(StageOp::Op18, u);
        r.added = {make_edge(u, nb[i]), make_edge(u, nb[j])};
        return r;
      }
    }
  }
  return std::nullopt;
}

// Leaf u of a good component joins the component of v.
StageOpRecord leaf_join(const Snapshot& s, StageOp op, Vertex u, Vertex v) {
  StageOpRecord r = record(op, u);
  open_at(s, r, v);
  r.added.push_back(make_edge(u, v));
  return r;
}

Found find_op19(const Snapshot& s, const Graph& g, const Cover& current) {
  for (Vertex u : g.vertices()) {
    if (!s.of(u).good() || current.degree(u) > 1) continue;
    for (Vertex v : g.neighbors(u))
      if (!s.same(u, v)) return leaf_join(s, StageOp::Op19, u, v);
  }
  return std::nullopt;
}

Found find_op20(const Snapshot& s, const Graph& g) {
  for (const Component& c : s.d.components) {
    if (!c.is_cycle()) continue;
    EdgeSet cycle;
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      cycle.push_back(make_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
    std::sort(cycle.begin(), cycle.end());
    for (const Edge& e : cycle) {
      for (Vertex u1 : g.neighbors(e.u)) {
        if (s.d.component_of[u1] == c.id) continue;
        for (Vertex u2 : g.neighbors(e.v)) {
          if (s.d.component_of[u2] == c.id || s.same(u1, u2)) continue;
          StageOpRecord r = record(StageOp::Op20, e.u);
          r.removed.push_back(e);
          open_at(s, r, u1);
          open_at(s, r, u2);
          r.added = {make_edge(e.u, u1), make_edge(e.v, u2)};
          return r;
        }
      }
    }
  }
  return std::nullopt;
}

Found find_op21(const Snapshot& s, const Graph& g) {
  for (const Component& c : s.d.components) {
    if (!c.is_path() || !s.info[c.id].good() || c.size() == g.vertex_count()) continue;
    const Vertex a = c.vertices.front();
    const Vertex b = c.vertices.back();
    if (!is_dead_path(g, c) || !g.has_edge(a, b)) continue;
    VertexSet members = c.vertices;
    std::sort(members.begin(), members.end());
    for (Vertex u : members) {
      if (!is_port(g, members, u)) continue;
      // Close the path into a cycle, open it at u, then hang u onto its lowest outside neighbor.
      Component ring = c;
      ring.kind = ComponentKind::Cycle;
      ring.edge_count = c.size();
      StageOpRecord r = record(StageOp::Op21, u);
      r.removed.push_back(lower_cycle_edge(ring, u));
      r.added.push_back(make_edge(a, b));
      for (Vertex v : g.neighbors(u)) {
        if (contains(members, v)) continue;
        open_at(s, r, v);
        r.added.push_back(make_edge(u, v));
        break;
      }
      return r;
    }
  }
  return std::nullopt;
}

std::vector<Vertex> tree_path(const Cover& c, Vertex from, Vertex to) {
  std::vector<Vertex> parent(c.subgraph().id_bound(), -1);
  std::vector<Vertex> queue{from};
  parent[from] = from;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex y : c.neighbors(queue[i]))
      if (parent[y] < 0) {
        parent[y] = queue[i];
        queue.push_back(y);
      }
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Found find_op22(const Snapshot& s, const Graph& g, const Cover& current) {
  for (const Component& c : s.d.components) {
    if (c.kind != ComponentKind::Tree || !s.info[c.id].good()) continue;
    VertexSet leaves;
    for (Vertex v : c.vertices)
      if (current.degree(v) <= 1) leaves.push_back(v);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        if (!g.has_edge(leaves[i], leaves[j])) continue;
        const std::vector<Vertex> path = tree_path(current, leaves[i], leaves[j]);
        std::size_t pick = 0;
        for (std::size_t k = 1; k + 1 < path.size(); ++k)
          if (current.degree(path[k]) >= 3 && (pick == 0 || path[k] < path[pick])) pick = k;
        StageOpRecord r = record(StageOp::Op22, leaves[i]);
        r.removed.push_back(std::min(make_edge(path[pick], path[pick - 1]), make_edge(path[pick], path[pick + 1])));
        r.added.push_back(make_edge(leaves[i], leaves[j]));
        return r;
      }
    }
  }
  return std::nullopt;
}

Found find_op23(const Snapshot& s, const Graph& g) {
  for (const Component& c1 : s.d.components) {
    if (!c1.is_path() || c1.size() != 1) continue;
    const Vertex v = c1.vertices.front();
    for (const Component& p : s.d.components) {
      if (!p.is_path() || p.length() != 4) continue;
      const auto& u = p.vertices;
      if (!g.has_edge(v, u[1]) || !g.has_edge(v, u[3])) continue;
      for (Vertex x : g.neighbors(u[2])) {
        const int cx = s.d.component_of[x];
        if (cx == c1.id || cx == p.id) continue;
        StageOpRecord r = record(StageOp::Op23, v);
        r.removed.push_back(make_edge(u[1], u[2]));
        open_at(s, r, x);
        r.added = {make_edge(v, u[1]), make_edge(v, u[3]), make_edge(u[2], x)};
        return r;
      }
    }
  }
  return std::nullopt;
}

Found find_stage_op(const Snapshot& s, const Graph& g, const Cover& current) {
  if (auto r = find_op15(s, g)) return r;
  if (auto r = find_op16(s, g)) return r;
  if (auto r = find_op17(s, g)) return r;
  if (auto r = find_op18(s, g)) return r;
  if (auto r = find_op19(s, g, current)) return r;
  if (auto r = find_op20(s, g)) return r;
  if (auto r = find_op21(s, g)) return r;
  if (auto r = find_op22(s, g, current)) return r;
  if (auto r = find_op23(s, g)) return r;
  return std::nullopt;
}

}  // namespace

void stage2_fixpoint(StageState& state, const Graph& g) {
  const int budget = 4 * g.vertex_count() + 16;
  for (int step = 0;; ++step) {
    const Snapshot before(state.current, state.c0);
    Found r = find_stage_op(before, g, state.current);
    if (!r) break;
    if (step >= budget) throw MistError(ErrorKind::NonTermination, "stage 2 exceeded " + std::to_string(budget) + " steps");
    for (const Edge& e : r->removed) state.current.remove_edge(e.u, e.v);
    for (const Edge& e : r->added) state.current.add_edge(e.u, e.v);
    const Snapshot after(state.current, state.c0);
    r->result = after.of(r->anchor).classification;
    const std::string tag = std::string(to_string(r->op)) + " at " + std::to_string(r->anchor);
    if (!is_tftcc(state.current, g)) throw MistError(ErrorKind::InternalInvariant, tag + " broke the forest");
    if (r->result == Classification::Bad) state.contract_violations.push_back(tag + " produced a bad component");
    if (after.cycle_count() > before.cycle_count()) state.contract_violations.push_back(tag + " added a cycle");
    if (after.bad_count() > before.bad_count()) state.contract_violations.push_back(tag + " added a bad component");
    state.ops.push_back(std::move(*r));
  }
  state.c2 = state.current;
}

TreeResult stage3_finish(StageState& state, const Graph& g) {
  const Decomposition d = state.current.decompose();
  state.spanning_cycle = d.components.size() == 1 && d.components.front().is_cycle();
  DisjointSets ds = sets_of(state.current);
  for (const Component& c : d.components) {
    if (!c.is_cycle()) continue;
    VertexSet members = c.vertices;
    std::sort(members.begin(), members.end());
    if (state.spanning_cycle) {
      const Edge r = lower_cycle_edge(c, members.front());
      state.current.remove_edge(r.u, r.v);
      break;
    }
    auto e = lowest_escape(g, members, ds);
    if (!e) throw MistError(ErrorKind::InternalInvariant, "cycle at " + std::to_string(members.front()) + " is isolated");
    const Vertex u = contains(members, e->u) ? e->u : e->v;
    const Edge r = lower_cycle_edge(c, u);
    state.current.remove_edge(r.u, r.v);
    state.current.add_edge(e->u, e->v);
    ds.unite(e->u, e->v);
  }
  join_components(state.current, g);
  return finish(state.current, g);
}

TreeResult build_tree_refined(StageState& state, const Graph& g) {
  stage1_connect(state, g);
  stage2_fixpoint(state, g);
  return stage3_finish(state, g);
}

ComponentStats compute_stats(const Cover& c2, const Cover& c0) {
  const Decomposition d = c2.decompose();
  ComponentStats s;
  for (const ComponentInfo& i : classify_all(c2, d, c0)) {
    if (i.kind == ComponentKind::Cycle && i.length == 4) ++s.c4;
    if (i.kind == ComponentKind::Cycle && i.length == 5) ++s.c5;
    if (i.kind == ComponentKind::Path && i.length == 4 && !i.good()) ++s.p4;
    if (i.classification == Classification::GoodC2) {
      s.g2 += i.w;
      s.b2 += i.b;
    } else if (i.classification == Classification::GoodC3) {
      s.g3 += i.w;
      s.b3 += i.b;
    }
  }
  return s;
}

namespace {

struct Checks {
  std::deque<Predicate> items;

  Predicate& add(std::string name) {
    items.push_back({std::move(name), true, {}});
    return items.back();
  }
  static void fail(Predicate& p, const std::string& detail) {
    if (p.passed) p.detail = detail;
    p.passed = false;
  }
  std::vector<Predicate> out() const { return {items.begin(), items.end()}; }
};

std::string at(Vertex v) { return "vertex " + std::to_string(v); }

// Components other than c that have a vertex adjacent to c in g.
std::set<int> neighbor_components(const Decomposition& d, const Component& c, const Graph& g) {
  std::set<int> out;
  for (Vertex v : c.vertices)
    for (Vertex u : g.neighbors(v))
      if (d.component_of[u] != c.id) out.insert(d.component_of[u]);
  return out;
}

}  // namespace

std::vector<Predicate> stage1_predicates(const StageState& state, const Graph& g) {
  Checks ck;
  const Cover& c1 = state.c1 ? *state.c1 : state.current;
  const Decomposition d = c1.decompose();
  const std::vector<ComponentInfo> info = classify_all(c1, d, state.c0);

  Predicate& links = ck.add("stage 1 links join distinct components");
  for (const std::string& v : state.contract_violations)
    if (v.rfind("stage 1", 0) == 0) Checks::fail(links, v);

  Predicate& attached = ck.add("attached trees satisfy the 4/5 condition");
  for (const ComponentInfo& i : info)
    if (i.kind == ComponentKind::Tree && !meets_c2(i.b, i.w, i.leaves))
      Checks::fail(attached, "tree at " + at(d.components[i.id].vertices.front()));

  Predicate& shapes = ck.add("bad components are cycles, isolated vertices or leaf-ended 4-paths");
  Predicate& isolated = ck.add("isolated vertices see only non-adjacent internal tree vertices");
  for (const ComponentInfo& i : info) {
    if (i.good()) continue;
    const Component& c = d.components[i.id];
    if (c.is_cycle() && c.length() >= 4) continue;
    if (c.is_path() && c.size() == 1) {
      const Vertex u = c.vertices.front();
      auto nb = g.neighbors(u);
      for (Vertex v : nb)
        if (!d.of(v).is_tree() || c1.degree(v) < 2) Checks::fail(isolated, at(u) + " sees " + at(v));
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
          if (c1.has_edge(nb[a], nb[b])) Checks::fail(isolated, at(u) + " sees a covered edge");
      continue;
    }
    if (c.is_path() && c.length() == 4 && g.degree(c.vertices.front()) == 1 && g.degree(c.vertices.back()) == 1)
      continue;
    Checks::fail(shapes, to_string(c.kind) + std::string(" of length ") + std::to_string(c.length()) + " at " +
                             at(c.vertices.front()));
  }
  return ck.out();
}

std::vector<Predicate> stage2_predicates(const StageState& state, const Graph& g, const TreeResult& tree) {
  Checks ck;
  const Cover& c2 = state.c2 ? *state.c2 : state.current;
  const Decomposition d = c2.decompose();
  const std::vector<ComponentInfo> info = classify_all(c2, d, state.c0);

  Predicate& contract = ck.add("stage 2 operations were all good");
  for (const std::string& v : state.contract_violations)
    if (v.rfind("stage 1", 0) != 0) Checks::fail(contract, v);

  if (state.spanning_cycle) {
    Predicate& ham = ck.add("spanning cycle opened into a Hamiltonian path");
    if (tree.weight != g.vertex_count() - 2) Checks::fail(ham, "weight " + std::to_string(tree.weight));
    return ck.out();
  }

  auto is_kind = [&](int id, ComponentKind k, int len) {
    return d.components[id].kind == k && d.components[id].length() == len;
  };
  auto is_4cycle = [&](int id) { return is_kind(id, ComponentKind::Cycle, 4); };
  auto is_5cycle = [&](int id) { return is_kind(id, ComponentKind::Cycle, 5); };
  auto is_4path = [&](int id) { return is_kind(id, ComponentKind::Path, 4) && !info[id].good(); };
  auto is_isolated = [&](int id) { return d.components[id].size() == 1; };
  auto internal = [&](Vertex v) { return c2.degree(v) >= 2; };

  Predicate& kinds = ck.add("components are 4-cycles, 5-cycles, isolated vertices, 4-paths or good");
  for (const ComponentInfo& i : info)
    if (!(i.good() || is_4cycle(i.id) || is_5cycle(i.id) || is_4path(i.id) || is_isolated(i.id)))
      Checks::fail(kinds, to_string(i.kind) + std::string(" of length ") + std::to_string(i.length) + " at " +
                              at(d.components[i.id].vertices.front()));

  Predicate& one = ck.add("4-cycles touch at most one other component");
  Predicate& c4c4 = ck.add("4-cycles are not adjacent to each other");
  Predicate& c4p4 = ck.add("4-cycles are not adjacent to 4-paths");
  Predicate& c4c5 = ck.add("4-cycles are not adjacent to 5-cycles");
  Predicate& c4n = ck.add("4-cycle neighbors are internal vertices of good components");
  Predicate& c5n = ck.add("5-cycle neighbors are internal vertices of 4-paths");
  Predicate& iso = ck.add("isolated vertices hang off the internal vertices of one tree");
  Predicate& p4n = ck.add("4-paths end at graph leaves and their internal vertices see allowed neighbors");
  Predicate& leafn = ck.add("leaves of good components see only their own internal vertices");

  for (const Component& c : d.components) {
    const std::string where = at(c.vertices.front());
    if (is_4cycle(c.id)) {
      const std::set<int> adj = neighbor_components(d, c, g);
      if (adj.size() > 1) Checks::fail(one, where);
      for (int o : adj) {
        if (is_4cycle(o)) Checks::fail(c4c4, where);
        if (is_4path(o)) Checks::fail(c4p4, where);
        if (is_5cycle(o)) Checks::fail(c4c5, where);
      }
      for (Vertex v : c.vertices)
        for (Vertex u : g.neighbors(v))
          if (d.component_of[u] != c.id && (!info[d.component_of[u]].good() || !internal(u)))
            Checks::fail(c4n, where + " sees " + at(u));
    } else if (is_5cycle(c.id)) {
      for (Vertex v : c.vertices)
        for (Vertex u : g.neighbors(v))
          if (d.component_of[u] != c.id && (!is_4path(d.component_of[u]) || !internal(u)))
            Checks::fail(c5n, where + " sees " + at(u));
    } else if (is_isolated(c.id) && c.is_path()) {
      const Vertex u = c.vertices.front();
      std::set<int> hosts;
      for (Vertex v : g.neighbors(u)) {
        hosts.insert(d.component_of[v]);
        if (!internal(v)) Checks::fail(iso, at(u) + " sees " + at(v));
      }
      if (hosts.size() != 1 || !d.components[*hosts.begin()].is_tree()) {
        Checks::fail(iso, at(u) + " sees several components");
      } else if (!info[*hosts.begin()].good() && g.degree(u) != 1) {
        Checks::fail(iso, at(u) + " is not a leaf of the graph");
      }
    } else if (is_4path(c.id)) {
      if (g.degree(c.vertices.front()) != 1 || g.degree(c.vertices.back()) != 1) Checks::fail(p4n, where);
      for (std::size_t k = 1; k + 1 < c.vertices.size(); ++k) {
        for (Vertex v : g.neighbors(c.vertices[k])) {
          const int cv = d.component_of[v];
          const bool ok = g.degree(v) == 1 || is_5cycle(cv) || (internal(v) && (is_4path(cv) || info[cv].good()));
          if (!ok) Checks::fail(p4n, at(c.vertices[k]) + " sees " + at(v));
        }
      }
    } else if (info[c.id].good() && c.size() < g.vertex_count()) {
      for (Vertex u : c.vertices) {
        if (c2.degree(u) > 1) continue;
        for (Vertex v : g.neighbors(u))
          if (d.component_of[v] != c.id || !internal(v)) Checks::fail(leafn, at(u) + " sees " + at(v));
      }
    }
  }

  const ComponentStats s = compute_stats(c2, state.c0);
  Predicate& weight = ck.add("tree weight covers the component counters");
  const int floor = 3 * s.c4 + 4 * s.c5 + 3 * s.p4 + s.g2 + s.g3;
  if (tree.weight < floor) Checks::fail(weight, std::to_string(tree.weight) + " < " + std::to_string(floor));
  return ck.out();
}

std::vector<Predicate> stats_predicates(const ComponentStats& s, int opt) {
  Checks ck;
  Predicate& first = ck.add("opt within the initial-cover counter bound");
  const int bound1 = 4 * s.c4 + 5 * s.c5 + 4 * s.p4 + s.b2 + s.b3;
  if (opt > bound1) Checks::fail(first, std::to_string(opt) + " > " + std::to_string(bound1));
  Predicate& second = ck.add("opt within the internal-vertex counter bound");
  const int bound2 = 3 * s.c4 + 5 * s.c5 + 3 * s.p4 + 2 * s.g2 + 2 * s.g3;
  if (opt > bound2) Checks::fail(second, std::to_string(opt) + " > " + std::to_string(bound2));
  return ck.out();
}

}  // namespace mist
