#include "mist/generate.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "mist/cover_solver.hpp"
#include "mist/errors.hpp"

namespace mist {

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_below(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Graph random_connected_gnp(int n, double p, std::mt19937_64& rng) {
  if (n < 1 || !(p > 0.0) || p > 1.0) throw MistError(ErrorKind::BadParams, "gnp needs n >= 1 and 0 < p <= 1");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (uniform_unit(rng) < p) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
  throw MistError(ErrorKind::BadParams, "gnp with p=" + std::to_string(p) + " never produced a connected graph");
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw MistError(ErrorKind::BadParams, "tree needs n >= 1");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(uniform_below(rng, v), v);
  return g;
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "gnp") return Family::Gnp;
  if (name == "cycle") return Family::Cycle;
  if (name == "path") return Family::Path;
  if (name == "theta") return Family::Theta;
  if (name == "twins") return Family::Twins;
  return std::nullopt;
}

namespace {

Graph cycle(int n) {
  if (n < 3) throw MistError(ErrorKind::BadParams, "cycle needs n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  if (n < 1) throw MistError(ErrorKind::BadParams, "path needs n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// Two hubs joined by three internally disjoint paths of near-equal length.
Graph theta(int n) {
  if (n < 4) throw MistError(ErrorKind::BadParams, "theta needs n >= 4");
  Graph g(n);
  const int inner = n - 2;
  Vertex next = 2;
  for (int k = 0; k < 3; ++k) {
    const int len = inner / 3 + (k < inner % 3 ? 1 : 0);
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

// Random core plus two degree-2 twins on its two busiest vertices.
Graph twins(int n, double p, std::mt19937_64& rng) {
  if (n < 5) throw MistError(ErrorKind::BadParams, "twins needs n >= 5");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Graph core = random_connected_gnp(n - 2, std::max(p, 0.5), rng);
    std::vector<Vertex> order = core.vertices();
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return core.degree(a) > core.degree(b); });
    Graph g(n);
    for (const Edge& e : core.edges()) g.add_edge(e.u, e.v);
    for (Vertex x : {n - 2, n - 1}) {
      g.add_edge(x, order[0]);
      g.add_edge(x, order[1]);
    }
    const auto pairs = find_twin_pairs(g);
    if (pairs.size() == 1 && g.degree(order[0]) >= 3 && g.degree(order[1]) >= 3) return g;
  }
  throw MistError(ErrorKind::BadParams, "could not place a single twin pair");
}

using Rows = std::vector<std::uint32_t>;

std::uint64_t code_of(const Rows& adj, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | ((adj[perm[i]] >> perm[j]) & 1U);
  return code;
}

// Minimum adjacency code over orderings that sort vertices by degree; only
// permutations inside each degree class are tried.
std::uint64_t canonical_code(const Rows& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  auto deg = [&](int v) { return __builtin_popcount(adj[v]); };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return deg(a) != deg(b) ? deg(a) > deg(b) : a < b; });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(perm[j]) == deg(perm[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~0ULL;
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      best = std::min(best, code_of(adj, perm));
      return;
    }
    auto first = perm.begin() + blocks[block].first;
    auto last = perm.begin() + blocks[block].second;
    std::sort(first, last);
    do {
      self(self, block + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

Graph to_graph(const Rows& adj) {
  const int n = static_cast<int>(adj.size());
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((adj[u] >> v) & 1U) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph generate(Family family, int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (family) {
    case Family::Gnp: return random_connected_gnp(n, p, rng);
    case Family::Cycle: return cycle(n);
    case Family::Path: return path(n);
    case Family::Theta: return theta(n);
    case Family::Twins: return twins(n, p, rng);
  }
  throw MistError(ErrorKind::BadParams, "unknown family");
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw MistError(ErrorKind::BadParams, "enumeration supports 1 <= n <= 8");
  // Every connected graph arises from a smaller connected one by adding a
  // non-cut vertex.
  std::vector<Rows> level{Rows{0U}};
  for (int k = 2; k <= n; ++k) {
    std::vector<Rows> next;
    std::set<std::uint64_t> seen;
    for (const Rows& base : level) {
      for (std::uint32_t mask = 1; mask < (1U << (k - 1)); ++mask) {
        Rows adj = base;
        adj.push_back(mask);
        for (int v = 0; v < k - 1; ++v)
          if ((mask >> v) & 1U) adj[v] |= 1U << (k - 1);
        if (seen.insert(canonical_code(adj)).second) next.push_back(std::move(adj));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const Rows& adj : level) out.push_back(to_graph(adj));
  return out;
}

}  // namespace mist
