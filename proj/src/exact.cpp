#include "mist/exact.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>

#include "mist/errors.hpp"

namespace mist {

TreeResult make_tree_result(const Graph& g, EdgeSet edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<int> degree(g.id_bound(), 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  TreeResult t;
  t.edges = std::move(edges);
  for (Vertex v : g.vertices()) {
    if (degree[v] >= 2)
      ++t.weight;
    else
      t.leaves.push_back(v);
  }
  return t;
}

bool is_spanning_tree(const Graph& g, const TreeResult& t) {
  if (g.vertex_count() == 0) return t.edges.empty();
  if (static_cast<int>(t.edges.size()) != g.vertex_count() - 1) return false;
  Graph tree(g.id_bound());
  for (Vertex v = 0; v < g.id_bound(); ++v)
    if (!g.alive(v)) tree.remove_vertex(v);
  for (const Edge& e : t.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (!tree.add_edge(e.u, e.v)) return false;
  }
  if (!is_connected(tree)) return false;
  TreeResult expected = make_tree_result(g, t.edges);
  return expected.weight == t.weight && expected.leaves == t.leaves;
}

namespace {

struct LocalGraph {
  std::vector<Vertex> ids;          // local -> original
  std::vector<std::uint32_t> adj;   // bitmask adjacency
};

LocalGraph compact(const Graph& g) {
  LocalGraph lg;
  lg.ids = g.vertices();
  std::vector<int> local(g.id_bound(), -1);
  for (std::size_t i = 0; i < lg.ids.size(); ++i) local[lg.ids[i]] = static_cast<int>(i);
  lg.adj.assign(lg.ids.size(), 0);
  for (std::size_t i = 0; i < lg.ids.size(); ++i)
    for (Vertex u : g.neighbors(lg.ids[i])) lg.adj[i] |= 1u << local[u];
  return lg;
}

int lowest_bit(std::uint32_t x) { return __builtin_ctz(x); }

}  // namespace

TreeResult opt_spanning_tree(const Graph& g, const OracleLimits& limits) {
  const int k = g.vertex_count();
  if (k > limits.tree_cap)
    throw MistError(ErrorKind::SizeCapExceeded,
                    "spanning tree oracle on " + std::to_string(k) + " vertices (cap " + std::to_string(limits.tree_cap) + ")");
  if (!is_connected(g)) throw MistError(ErrorKind::DisconnectedInput, "spanning tree oracle needs a connected graph");
  if (k <= 1) return make_tree_result(g, {});

  const LocalGraph lg = compact(g);
  const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
  const std::size_t states = std::size_t{1} << k;

  // best[S][v][d]: internal vertices of S \ {v} in a tree spanning S rooted at
  // v whose root degree is min(d, 2); -1 when S admits no such tree.
  std::vector<std::int16_t> best(states * k * 3, -1);
  struct Back {
    std::uint32_t child_set = 0;
    std::int8_t child = -1;
    std::int8_t root_degree = -1;
  };
  std::vector<Back> back(states * k * 3);
  // attached[B][u]: value of the subtree on B rooted at u once u gains a parent.
  std::vector<std::int16_t> attached(states * k, -1);
  std::vector<std::int8_t> attached_degree(states * k, -1);

  auto at = [k](std::uint32_t s, int v, int d) { return (static_cast<std::size_t>(s) * k + v) * 3 + d; };

  for (std::uint32_t s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) {
      best[at(s, lowest_bit(s), 0)] = 0;
    } else {
      for (std::uint32_t vs = s; vs; vs &= vs - 1) {
        const int v = lowest_bit(vs);
        const std::uint32_t rest = s ^ (1u << v);
        const std::uint32_t anchor = rest & (~rest + 1);
        const std::uint32_t free_bits = rest ^ anchor;
        // The child subtree holding the smallest non-root vertex.
        for (std::uint32_t sub = free_bits;; sub = (sub - 1) & free_bits) {
          const std::uint32_t child_set = sub | anchor;
          const std::uint32_t remainder = s ^ child_set;
          int h = -1;
          int h_child = -1;
          for (std::uint32_t us = child_set & lg.adj[v]; us; us &= us - 1) {
            const int u = lowest_bit(us);
            const int val = attached[static_cast<std::size_t>(child_set) * k + u];
            if (val > h) {
              h = val;
              h_child = u;
            }
          }
          if (h >= 0) {
            for (int dv = 0; dv < 3; ++dv) {
              const int base = best[at(remainder, v, dv)];
              if (base < 0) continue;
              const int nd = std::min(dv + 1, 2);
              const int cand = base + h;
              if (cand > best[at(s, v, nd)]) {
                best[at(s, v, nd)] = static_cast<std::int16_t>(cand);
                back[at(s, v, nd)] = {child_set, static_cast<std::int8_t>(h_child), static_cast<std::int8_t>(dv)};
              }
            }
          }
          if (sub == 0) break;
        }
      }
    }
    for (std::uint32_t vs = s; vs; vs &= vs - 1) {
      const int v = lowest_bit(vs);
      for (int d = 0; d < 3; ++d) {
        const int val = best[at(s, v, d)];
        if (val < 0) continue;
        const int with_parent = val + (d >= 1 ? 1 : 0);
        if (with_parent > attached[static_cast<std::size_t>(s) * k + v]) {
          attached[static_cast<std::size_t>(s) * k + v] = static_cast<std::int16_t>(with_parent);
          attached_degree[static_cast<std::size_t>(s) * k + v] = static_cast<std::int8_t>(d);
        }
      }
    }
    if (s == full) break;
  }

  int root_degree = -1;
  int top = -1;
  for (int d = 0; d < 3; ++d) {
    const int val = best[at(full, 0, d)];
    if (val < 0) continue;
    const int total = val + (d >= 2 ? 1 : 0);
    if (total > top) {
      top = total;
      root_degree = d;
    }
  }

  EdgeSet edges;
  std::function<void(std::uint32_t, int, int)> rebuild = [&](std::uint32_t s, int v, int d) {
    if ((s & (s - 1)) == 0) return;
    const Back& b = back[at(s, v, d)];
    edges.push_back(make_edge(lg.ids[v], lg.ids[b.child]));
    rebuild(s ^ b.child_set, v, b.root_degree);
    rebuild(b.child_set, b.child, attached_degree[static_cast<std::size_t>(b.child_set) * k + b.child]);
  };
  rebuild(full, 0, root_degree);
  TreeResult t = make_tree_result(g, std::move(edges));
  if (t.weight != top) throw MistError(ErrorKind::InternalInvariant, "spanning tree oracle reconstruction mismatch");
  return t;
}

std::optional<std::vector<Vertex>> hamiltonian_path_between(const Graph& g, Vertex from, Vertex to,
                                                            const OracleLimits& limits) {
  const int k = g.vertex_count();
  if (k > limits.hamiltonian_cap)
    throw MistError(ErrorKind::SizeCapExceeded, "hamiltonian path search on " + std::to_string(k) + " vertices");
  if (from == to || !g.alive(from) || !g.alive(to)) return std::nullopt;
  const LocalGraph lg = compact(g);
  const auto local_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(lg.ids.begin(), lg.ids.end(), v) - lg.ids.begin());
  };
  const int s = local_of(from);
  const int t = local_of(to);
  const std::uint32_t full = (1u << k) - 1;
  std::vector<int> order{s};
  std::function<bool(int, std::uint32_t)> extend = [&](int cur, std::uint32_t seen) {
    if (seen == full) return cur == t;
    for (std::uint32_t next = lg.adj[cur] & ~seen; next; next &= next - 1) {
      const int y = lowest_bit(next);
      if (y == t && (seen | (1u << y)) != full) continue;
      order.push_back(y);
      if (extend(y, seen | (1u << y))) return true;
      order.pop_back();
    }
    return false;
  };
  if (!extend(s, 1u << s)) return std::nullopt;
  std::vector<Vertex> path;
  for (int x : order) path.push_back(lg.ids[x]);
  return path;
}

namespace {

struct CoverSearch {
  int k = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> capacity;
  int best_size = -1;
  std::vector<int> best_edges;
  std::vector<int> chosen;
  int ceiling = 0;

  struct State {
    std::array<std::int8_t, 32> degree{};
    std::array<std::int8_t, 32> other_end{};  // valid at path endpoints
    std::array<std::int8_t, 32> length{};     // path length, valid at endpoints
    std::array<std::int16_t, 32> available{}; // undecided incident edges
  };

  int bound(const State& st) const {
    int slack = 0;
    for (int v = 0; v < k; ++v) slack += std::min<int>(capacity[v] - st.degree[v], st.available[v]);
    return static_cast<int>(chosen.size()) + slack / 2;
  }

  void run(std::size_t i, State st) {
    if (best_size == ceiling) return;
    if (bound(st) <= best_size) return;
    if (i == edges.size()) {
      best_size = static_cast<int>(chosen.size());
      best_edges = chosen;
      return;
    }
    const auto [a, b] = edges[i];
    --st.available[a];
    --st.available[b];
    if (st.degree[a] < capacity[a] && st.degree[b] < capacity[b]) {
      State next = st;
      bool ok = true;
      if (st.other_end[a] == b) {
        // Closing a path into a cycle of length length + 1.
        ok = st.length[a] + 1 >= 4;
      } else {
        const int ea = st.other_end[a];
        const int eb = st.other_end[b];
        const int len = st.length[a] + st.length[b] + 1;
        next.other_end[ea] = static_cast<std::int8_t>(eb);
        next.other_end[eb] = static_cast<std::int8_t>(ea);
        next.length[ea] = next.length[eb] = static_cast<std::int8_t>(len);
      }
      if (ok) {
        ++next.degree[a];
        ++next.degree[b];
        chosen.push_back(static_cast<int>(i));
        run(i + 1, next);
        chosen.pop_back();
      }
    }
    run(i + 1, st);
  }
};

}  // namespace

Cover max_tfpcc_exact(const Graph& g, const VertexSet& forced_leaves, const OracleLimits& limits) {
  const int k = g.vertex_count();
  if (k > limits.cover_cap || k > 32)
    throw MistError(ErrorKind::SizeCapExceeded,
                    "exact TFPCC solver on " + std::to_string(k) + " vertices (cap " + std::to_string(limits.cover_cap) + ")");
  const LocalGraph lg = compact(g);
  CoverSearch search;
  search.k = k;
  search.capacity.assign(k, 2);
  int capacity_sum = 0;
  for (int v = 0; v < k; ++v) {
    if (contains(forced_leaves, lg.ids[v])) search.capacity[v] = 1;
    capacity_sum += search.capacity[v];
  }
  search.ceiling = capacity_sum / 2;
  CoverSearch::State st;
  for (int v = 0; v < k; ++v) {
    st.other_end[v] = static_cast<std::int8_t>(v);
    for (std::uint32_t us = lg.adj[v]; us; us &= us - 1) {
      const int u = lowest_bit(us);
      if (v < u) search.edges.emplace_back(v, u);
      ++st.available[v];
    }
  }
  std::sort(search.edges.begin(), search.edges.end());
  search.run(0, st);

  Cover c(g);
  for (int idx : search.best_edges) {
    const auto [a, b] = search.edges[idx];
    c.add_edge(lg.ids[a], lg.ids[b]);
  }
  return c;
}

Cover path_cover_from_tree(const TreeResult& t, const Graph& g) {
  Cover c(g);
  Graph tree(g.id_bound());
  for (const Edge& e : t.edges) tree.add_edge(e.u, e.v);
  Vertex root = -1;
  for (Vertex v : g.vertices())
    if (tree.degree(v) >= 2) {
      root = v;
      break;
    }
  if (root == -1) return c;
  std::vector<Vertex> parent(g.id_bound(), -1);
  std::vector<Vertex> stack{root};
  std::vector<std::uint8_t> seen(g.id_bound(), 0);
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    Vertex first_child = -1;
    for (Vertex y : tree.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      if (first_child == -1) first_child = y;
      stack.push_back(y);
    }
    if (first_child != -1) c.add_edge(x, first_child);
  }
  return c;
}

}  // namespace mist
