#include "mist/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mist {

Graph::Graph(int vertex_count)
    : adjacency_(vertex_count), alive_(vertex_count, 1), alive_count_(vertex_count) {}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!alive(a) || !alive(b)) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

VertexSet Graph::vertices() const {
  VertexSet out;
  out.reserve(alive_count_);
  for (Vertex v = 0; v < id_bound(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < id_bound(); ++v)
    for (Vertex u : adjacency_[v])
      if (v < u) out.push_back({v, u});
  return out;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  alive_.push_back(1);
  ++alive_count_;
  return id_bound() - 1;
}

bool Graph::add_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
  if (!alive(a) || !alive(b)) throw std::invalid_argument("edge endpoint is not alive: " + to_string(make_edge(a, b)));
  auto& adj_a = adjacency_[a];
  auto it = std::lower_bound(adj_a.begin(), adj_a.end(), b);
  if (it != adj_a.end() && *it == b) return false;
  adj_a.insert(it, b);
  auto& adj_b = adjacency_[b];
  adj_b.insert(std::lower_bound(adj_b.begin(), adj_b.end(), a), a);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex a, Vertex b) {
  if (!has_edge(a, b)) return false;
  auto& adj_a = adjacency_[a];
  adj_a.erase(std::lower_bound(adj_a.begin(), adj_a.end(), b));
  auto& adj_b = adjacency_[b];
  adj_b.erase(std::lower_bound(adj_b.begin(), adj_b.end(), a));
  --edge_count_;
  return true;
}

void Graph::remove_vertex(Vertex v) {
  if (!alive(v)) return;
  for (Vertex u : adjacency_[v]) {
    auto& adj_u = adjacency_[u];
    adj_u.erase(std::lower_bound(adj_u.begin(), adj_u.end(), v));
  }
  edge_count_ -= degree(v);
  adjacency_[v].clear();
  alive_[v] = 0;
  --alive_count_;
}

namespace {

std::vector<VertexSet> components_masked(const Graph& g, const std::vector<std::uint8_t>& blocked) {
  std::vector<VertexSet> out;
  std::vector<std::uint8_t> seen(g.id_bound(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.id_bound(); ++s) {
    if (!g.alive(s) || blocked[s] || seen[s]) continue;
    VertexSet comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x))
        if (!blocked[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Iterative lowpoint DFS filling bridges and articulation points.
void lowpoint_scan(const Graph& g, EdgeSet* bridges, VertexSet* cutpoints) {
  const int n = g.id_bound();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<int> child_count(n, 0);
  std::vector<std::uint8_t> is_cut(n, 0);
  int timer = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (!g.alive(root) || disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      auto nbrs = g.neighbors(x);
      if (next[x] < nbrs.size()) {
        Vertex y = nbrs[next[x]++];
        if (disc[y] == -1) {
          parent[y] = x;
          ++child_count[x];
          disc[y] = low[y] = timer++;
          stack.push_back(y);
        } else if (y != parent[x]) {
          low[x] = std::min(low[x], disc[y]);
        }
        continue;
      }
      stack.pop_back();
      Vertex p = parent[x];
      if (p == -1) continue;
      low[p] = std::min(low[p], low[x]);
      if (low[x] > disc[p] && bridges) bridges->push_back(make_edge(p, x));
      if (parent[p] != -1 && low[x] >= disc[p]) is_cut[p] = 1;
    }
    if (child_count[root] >= 2) is_cut[root] = 1;
  }
  if (bridges) std::sort(bridges->begin(), bridges->end());
  if (cutpoints)
    for (Vertex v = 0; v < n; ++v)
      if (is_cut[v]) cutpoints->push_back(v);
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_masked(g, std::vector<std::uint8_t>(g.id_bound(), 0));
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  std::vector<std::uint8_t> blocked(g.id_bound(), 0);
  for (Vertex v : removed)
    if (v >= 0 && v < g.id_bound()) blocked[v] = 1;
  return components_masked(g, blocked);
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

EdgeSet find_bridges(const Graph& g) {
  EdgeSet out;
  lowpoint_scan(g, &out, nullptr);
  return out;
}

VertexSet find_cutpoints(const Graph& g) {
  VertexSet out;
  lowpoint_scan(g, nullptr, &out);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_local.assign(g.id_bound(), -1);
  for (Vertex v : s) {
    if (!g.alive(v)) throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " is not alive");
    out.to_local[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  out.graph = Graph(static_cast<int>(s.size()));
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (v < u && out.to_local[u] != -1) out.graph.add_edge(out.to_local[v], out.to_local[u]);
  return out;
}

Graph restrict_to(const Graph& g, const VertexSet& keep) {
  Graph out = g;
  std::vector<std::uint8_t> kept(g.id_bound(), 0);
  for (Vertex v : keep) kept[v] = 1;
  for (Vertex v = 0; v < g.id_bound(); ++v)
    if (g.alive(v) && !kept[v]) out.remove_vertex(v);
  return out;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

std::string to_string(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

}  // namespace mist
