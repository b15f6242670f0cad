#include "mist/reduction.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "mist/errors.hpp"

namespace mist {

const char* to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::Op1: return "op1";
    case RuleKind::Op2: return "op2";
    case RuleKind::Op3: return "op3";
    case RuleKind::Op4: return "op4";
    case RuleKind::Op8: return "op8";
    case RuleKind::Op9: return "op9";
    case RuleKind::Op10: return "op10";
    case RuleKind::Op11: return "op11";
  }
  return "?";
}

bool RuleSet::has(RuleKind kind) const {
  switch (kind) {
    case RuleKind::Op1: return op1;
    case RuleKind::Op2: return op2;
    case RuleKind::Op3: return op3;
    case RuleKind::Op4: return op4;
    case RuleKind::Op8: return op8;
    case RuleKind::Op9: return op9;
    case RuleKind::Op10: return op10;
    case RuleKind::Op11: return op11;
  }
  return false;
}

RuleSet RuleSet::simple() {
  RuleSet r;
  r.op1 = r.op2 = r.op3 = r.op4 = true;
  return r;
}

RuleSet RuleSet::refined() {
  RuleSet r = simple();
  r.op8 = r.op9 = r.op10 = r.op11 = true;
  return r;
}

namespace {

// Degree-2 vertices grouped by their (sorted) neighbor pair.
std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> degree_two_twins(const Graph& g) {
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> groups;
  for (Vertex v : g.vertices())
    if (g.degree(v) == 2) groups[{g.neighbors(v)[0], g.neighbors(v)[1]}].push_back(v);
  return groups;
}

std::optional<StrongReduction> find_op1(const Graph& g) {
  if (g.vertex_count() <= 3) return std::nullopt;
  for (Vertex v : g.vertices()) {
    std::vector<Vertex> leaves;
    for (Vertex u : g.neighbors(v))
      if (g.degree(u) <= 1) leaves.push_back(u);
    if (leaves.size() >= 2) {
      StrongReduction r;
      r.kind = RuleKind::Op1;
      r.witness = {leaves[0], leaves[1], v};
      r.deleted_vertices = {leaves[1]};
      r.reattach_to = v;
      return r;
    }
  }
  return std::nullopt;
}

std::optional<StrongReduction> find_op2(const Graph& g) {
  const EdgeSet bridges = find_bridges(g);
  const VertexSet cuts = find_cutpoints(g);
  for (const Edge& e : g.edges()) {
    if (std::binary_search(bridges.begin(), bridges.end(), e)) continue;
    // G - {u_i} has a component avoiding the other endpoint iff u_i is a cut-point.
    if (contains(cuts, e.u) && contains(cuts, e.v)) {
      StrongReduction r;
      r.kind = RuleKind::Op2;
      r.witness = {e.u, e.v};
      r.deleted_edges = {e};
      return r;
    }
  }
  return std::nullopt;
}

std::optional<StrongReduction> find_op8(const Graph& g) {
  const VertexSet cuts = find_cutpoints(g);
  std::optional<std::tuple<Vertex, Vertex, Vertex, Vertex>> best;
  for (const auto& [boundary, twins] : degree_two_twins(g)) {
    if (twins.size() < 2) continue;
    for (auto [u1, u2] : {boundary, std::pair{boundary.second, boundary.first}}) {
      // G - {u2} has a component avoiding u1 iff u2 is a cut-point.
      if (!contains(cuts, u2)) continue;
      auto cand = std::tuple{u1, u2, twins[0], twins[1]};
      if (!best || cand < *best) best = cand;
    }
  }
  if (!best) return std::nullopt;
  auto [u1, u2, u3, u4] = *best;
  StrongReduction r;
  r.kind = RuleKind::Op8;
  r.witness = {u1, u2, u3, u4};
  r.deleted_edges = {make_edge(u2, u3)};
  return r;
}

std::optional<StrongReduction> find_op9(const Graph& g) {
  for (const auto& [boundary, twins] : degree_two_twins(g)) {
    if (twins.size() < 3) continue;
    StrongReduction r;
    r.kind = RuleKind::Op9;
    r.witness = {boundary.first, boundary.second, twins[0], twins[1], twins[2]};
    r.deleted_edges = {make_edge(boundary.second, twins[0])};
    return r;
  }
  return std::nullopt;
}

std::optional<StrongReduction> find_op10(const Graph& g, const ReductionOptions& options) {
  const VertexSet all = g.vertices();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Vertex u = all[i];
      const Vertex v = all[j];
      for (const VertexSet& k : components_without(g, {u, v})) {
        if (static_cast<int>(k.size()) > options.path_gadget_max) continue;
        if (static_cast<int>(k.size()) + 2 == g.vertex_count()) continue;
        VertexSet gadget = k;
        gadget.push_back(u);
        gadget.push_back(v);
        std::sort(gadget.begin(), gadget.end());
        const InducedSubgraph sub = induced_subgraph(g, gadget);
        const Vertex lu = sub.to_local[u];
        const Vertex lv = sub.to_local[v];
        auto path = hamiltonian_path_between(sub.graph, lu, lv, options.limits);
        if (!path) continue;
        EdgeSet kept;
        for (std::size_t p = 0; p + 1 < path->size(); ++p)
          kept.push_back(make_edge(sub.to_original[(*path)[p]], sub.to_original[(*path)[p + 1]]));
        std::sort(kept.begin(), kept.end());
        EdgeSet removed;
        for (const Edge& e : sub.graph.edges()) {
          Edge original = make_edge(sub.to_original[e.u], sub.to_original[e.v]);
          if (!std::binary_search(kept.begin(), kept.end(), original)) removed.push_back(original);
        }
        // A gadget that already is the path leaves nothing to delete.
        if (removed.empty()) continue;
        std::sort(removed.begin(), removed.end());
        StrongReduction r;
        r.kind = RuleKind::Op10;
        r.witness = {u, v};
        for (Vertex p : *path) r.witness.push_back(sub.to_original[p]);
        r.deleted_edges = std::move(removed);
        return r;
      }
    }
  }
  return std::nullopt;
}

bool is_cutpoint_within(const Graph& g, const VertexSet& component, Vertex v) {
  const InducedSubgraph sub = induced_subgraph(g, component);
  return contains(find_cutpoints(sub.graph), sub.to_local[v]);
}

std::optional<WeakReduction> find_op3(const Graph& g) {
  for (const Edge& e : find_bridges(g)) {
    Graph split = g;
    split.remove_edge(e.u, e.v);
    VertexSet side_u, side_v;
    for (VertexSet& comp : connected_components(split)) {
      if (contains(comp, e.u)) side_u = std::move(comp);
      else if (contains(comp, e.v)) side_v = std::move(comp);
    }
    if (is_cutpoint_within(g, side_u, e.u) && is_cutpoint_within(g, side_v, e.v)) {
      WeakReduction r;
      r.kind = RuleKind::Op3;
      r.constant = 0;
      r.recipe = BridgeSplit{e};
      return r;
    }
  }
  return std::nullopt;
}

std::optional<WeakReduction> find_op4(const Graph& g, const ReductionOptions& options) {
  for (Vertex v : find_cutpoints(g)) {
    for (const VertexSet& k : components_without(g, {v})) {
      const int size = static_cast<int>(k.size());
      if (size < 2 || size > options.pendant_component_max) continue;
      // K' = G[K + v] with a pendant attached to v.
      VertexSet with_cut = k;
      with_cut.insert(std::lower_bound(with_cut.begin(), with_cut.end(), v), v);
      InducedSubgraph sub = induced_subgraph(g, with_cut);
      const Vertex local_pendant = sub.graph.add_vertex();
      sub.graph.add_edge(sub.to_local[v], local_pendant);
      const TreeResult best = opt_spanning_tree(sub.graph, options.limits);
      PendantReplace recipe;
      recipe.cut_point = v;
      recipe.component = k;
      recipe.pendant = g.id_bound();
      for (const Edge& e : best.edges) {
        if (e.u == local_pendant || e.v == local_pendant) continue;
        recipe.component_tree.push_back(make_edge(sub.to_original[e.u], sub.to_original[e.v]));
      }
      std::sort(recipe.component_tree.begin(), recipe.component_tree.end());
      WeakReduction r;
      r.kind = RuleKind::Op4;
      r.constant = best.weight - 1;
      r.recipe = std::move(recipe);
      return r;
    }
  }
  return std::nullopt;
}

std::optional<WeakReduction> find_op11(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
    auto other = [&](Vertex x, Vertex not_this) {
      auto nb = g.neighbors(x);
      return nb[0] == not_this ? nb[1] : nb[0];
    };
    WeakReduction r;
    r.kind = RuleKind::Op11;
    r.constant = 1;
    r.recipe = DegreeTwoMerge{e.u, e.v, other(e.u, e.v), other(e.v, e.u)};
    return r;
  }
  return std::nullopt;
}

[[noreturn]] void stale(const std::string& what) { throw MistError(ErrorKind::StaleWitness, what); }

}  // namespace

std::optional<StrongReduction> find_strong_reduction(const Graph& g, const RuleSet& rules,
                                                     const ReductionOptions& options) {
  if (rules.op1)
    if (auto r = find_op1(g)) return r;
  if (rules.op2)
    if (auto r = find_op2(g)) return r;
  if (rules.op8)
    if (auto r = find_op8(g)) return r;
  if (rules.op9)
    if (auto r = find_op9(g)) return r;
  if (rules.op10)
    if (auto r = find_op10(g, options)) return r;
  return std::nullopt;
}

Graph apply_strong_reduction(const Graph& g, const StrongReduction& r) {
  Graph out = g;
  if (r.kind == RuleKind::Op1) {
    for (Vertex x : r.deleted_vertices) {
      if (!g.alive(x) || g.degree(x) != 1 || !g.has_edge(x, r.reattach_to))
        stale("op1 leaf " + std::to_string(x) + " no longer hangs off " + std::to_string(r.reattach_to));
      out.remove_vertex(x);
    }
  }
  for (const Edge& e : r.deleted_edges)
    if (!out.remove_edge(e.u, e.v)) stale(std::string(to_string(r.kind)) + " edge " + to_string(e) + " is gone");
  return out;
}

std::optional<WeakReduction> find_weak_reduction(const Graph& g, const RuleSet& rules,
                                                 const ReductionOptions& options) {
  if (rules.op3)
    if (auto r = find_op3(g)) return r;
  if (rules.op4)
    if (auto r = find_op4(g, options)) return r;
  if (rules.op11)
    if (auto r = find_op11(g)) return r;
  return std::nullopt;
}

std::vector<Graph> apply_weak_reduction(const Graph& g, const WeakReduction& r) {
  std::vector<Graph> out;
  if (const auto* split = std::get_if<BridgeSplit>(&r.recipe)) {
    const Edge e = split->bridge;
    Graph cut = g;
    if (!cut.remove_edge(e.u, e.v)) stale("op3 bridge " + to_string(e) + " is gone");
    const auto comps = connected_components(cut);
    if (comps.size() != 2) stale("op3 edge " + to_string(e) + " is not a bridge");
    const bool u_first = contains(comps[0], e.u);
    out.push_back(restrict_to(cut, u_first ? comps[0] : comps[1]));
    out.push_back(restrict_to(cut, u_first ? comps[1] : comps[0]));
  } else if (const auto* rep = std::get_if<PendantReplace>(&r.recipe)) {
    if (g.id_bound() != rep->pendant) stale("op4 pendant id no longer fresh");
    Graph reduced = g;
    for (Vertex x : rep->component) {
      if (!g.alive(x)) stale("op4 component vertex " + std::to_string(x) + " is gone");
      reduced.remove_vertex(x);
    }
    const Vertex pendant = reduced.add_vertex();
    reduced.add_edge(rep->cut_point, pendant);
    out.push_back(std::move(reduced));
  } else if (const auto* merge = std::get_if<DegreeTwoMerge>(&r.recipe)) {
    if (!g.has_edge(merge->kept, merge->absorbed) || g.degree(merge->kept) != 2 || g.degree(merge->absorbed) != 2)
      stale("op11 edge no longer joins two degree-2 vertices");
    Graph merged = g;
    merged.remove_vertex(merge->absorbed);
    if (merge->absorbed_outer != merge->kept_outer) merged.add_edge(merge->kept, merge->absorbed_outer);
    out.push_back(std::move(merged));
  }
  for (const Graph& h : out) {
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())
      throw MistError(ErrorKind::InternalInvariant, "weak reduction grew the graph");
  }
  int vertices = 0, edges = 0;
  for (const Graph& h : out) {
    vertices += h.vertex_count();
    edges += h.edge_count();
  }
  if (vertices > g.vertex_count() || edges > g.edge_count() || vertices + edges >= g.vertex_count() + g.edge_count())
    throw MistError(ErrorKind::InternalInvariant, "weak reduction did not shrink |V| + |E|");
  return out;
}

TreeResult lift_strong(const Graph& before, const StrongReduction& r, const TreeResult& t) {
  EdgeSet edges = t.edges;
  if (r.kind == RuleKind::Op1)
    for (Vertex x : r.deleted_vertices) edges.push_back(make_edge(x, r.reattach_to));
  return make_tree_result(before, std::move(edges));
}

TreeResult lift_tree(const Graph& before, const WeakReduction& r, const std::vector<TreeResult>& subtrees) {
  const std::size_t expected = r.kind == RuleKind::Op3 ? 2 : 1;
  if (subtrees.size() != expected)
    throw MistError(ErrorKind::ArityMismatch, std::string(to_string(r.kind)) + " expects " + std::to_string(expected) +
                                                  " subtrees, got " + std::to_string(subtrees.size()));
  EdgeSet edges;
  auto drop = [&edges](Edge e) {
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) return false;
    edges.erase(it);
    return true;
  };
  if (const auto* split = std::get_if<BridgeSplit>(&r.recipe)) {
    edges = subtrees[0].edges;
    edges.insert(edges.end(), subtrees[1].edges.begin(), subtrees[1].edges.end());
    edges.push_back(split->bridge);
  } else if (const auto* rep = std::get_if<PendantReplace>(&r.recipe)) {
    edges = subtrees[0].edges;
    if (!drop(make_edge(rep->cut_point, rep->pendant)))
      throw MistError(ErrorKind::InternalInvariant, "op4 subtree misses the pendant edge");
    edges.insert(edges.end(), rep->component_tree.begin(), rep->component_tree.end());
  } else if (const auto* m = std::get_if<DegreeTwoMerge>(&r.recipe)) {
    edges = subtrees[0].edges;
    const Edge via_kept = make_edge(m->kept_outer, m->kept);
    const Edge via_absorbed = make_edge(m->absorbed_outer, m->kept);
    const Edge inner = make_edge(m->kept, m->absorbed);
    if (m->kept_outer == m->absorbed_outer) {
      // The merged vertex is a leaf hanging off the common neighbor.
      if (!drop(via_kept)) throw MistError(ErrorKind::InternalInvariant, "op11 subtree misses the merged leaf edge");
      edges.push_back(inner);
      edges.push_back(make_edge(m->absorbed, m->absorbed_outer));
    } else {
      const bool has_kept = std::find(edges.begin(), edges.end(), via_kept) != edges.end();
      const bool has_absorbed = std::find(edges.begin(), edges.end(), via_absorbed) != edges.end();
      if (has_kept && !has_absorbed) {
        edges.push_back(inner);
      } else if (!has_kept && has_absorbed) {
        drop(via_absorbed);
        edges.push_back(inner);
        edges.push_back(make_edge(m->absorbed, m->absorbed_outer));
      } else if (has_kept && has_absorbed) {
        drop(via_absorbed);
        edges.push_back(inner);
        edges.push_back(make_edge(m->absorbed, m->absorbed_outer));
      } else {
        throw MistError(ErrorKind::InternalInvariant, "op11 subtree leaves the merged vertex isolated");
      }
    }
  }
  TreeResult lifted = make_tree_result(before, std::move(edges));
  int floor_weight = r.constant;
  for (const TreeResult& t : subtrees) floor_weight += t.weight;
  if (lifted.weight < floor_weight)
    throw MistError(ErrorKind::InternalInvariant, std::string(to_string(r.kind)) + " lift lost weight");
  return lifted;
}

namespace {

int build_node(ReductionTrace& trace, std::vector<Graph>& leaves, Graph input, const RuleSet& rules,
               const ReductionOptions& options) {
  const int index = static_cast<int>(trace.nodes.size());
  trace.nodes.push_back(TraceNode{std::move(input), {}, std::nullopt, {}, -1});
  Graph current = trace.nodes[index].input;
  while (auto r = find_strong_reduction(current, rules, options)) {
    const int edges_before = current.edge_count();
    Graph next = apply_strong_reduction(current, *r);
    if (next.edge_count() >= edges_before)
      throw MistError(ErrorKind::InternalInvariant, "strong reduction did not delete an edge");
    trace.nodes[index].strong.push_back({*r, next});
    current = std::move(next);
  }
  auto weak = find_weak_reduction(current, rules, options);
  if (!weak) {
    trace.nodes[index].leaf_index = static_cast<int>(leaves.size());
    trace.leaf_nodes.push_back(index);
    leaves.push_back(std::move(current));
    return index;
  }
  std::vector<Graph> produced = apply_weak_reduction(current, *weak);
  trace.nodes[index].weak = std::move(*weak);
  std::vector<int> children;
  for (Graph& h : produced) children.push_back(build_node(trace, leaves, std::move(h), rules, options));
  trace.nodes[index].children = std::move(children);
  return index;
}

TreeResult lift_node(const ReductionTrace& trace, int index, const std::vector<TreeResult>& leaf_trees) {
  const TraceNode& node = trace.nodes[index];
  TreeResult t;
  if (node.leaf_index >= 0) {
    t = leaf_trees[node.leaf_index];
  } else {
    std::vector<TreeResult> subtrees;
    for (int child : node.children) subtrees.push_back(lift_node(trace, child, leaf_trees));
    t = lift_tree(node.reduced(), *node.weak, subtrees);
  }
  for (std::size_t i = node.strong.size(); i-- > 0;) {
    const Graph& before = i == 0 ? node.input : node.strong[i - 1].after;
    t = lift_strong(before, node.strong[i].reduction, t);
  }
  return t;
}

}  // namespace

ReductionResult reduce_to_fixpoint(const Graph& g, const RuleSet& rules, const ReductionOptions& options) {
  if (!is_connected(g)) throw MistError(ErrorKind::DisconnectedInput, "reduction needs a connected graph");
  ReductionResult result;
  build_node(result.trace, result.irreducible, g, rules, options);
  return result;
}

TreeResult lift_all(const ReductionTrace& trace, const std::vector<TreeResult>& leaf_trees) {
  if (leaf_trees.size() != trace.leaf_nodes.size())
    throw MistError(ErrorKind::ArityMismatch, "expected " + std::to_string(trace.leaf_nodes.size()) + " leaf trees");
  return lift_node(trace, 0, leaf_trees);
}

}  // namespace mist
