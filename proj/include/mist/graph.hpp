#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mist {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Sorted, duplicate-free collections over the graph's id space.
using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<Edge>;

// Simple undirected graph over dense integer ids. Deleting a vertex keeps its
// id reserved (alive mask) so reduction traces can refer to original ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  // Size of the id space, counting deleted vertices.
  int id_bound() const { return static_cast<int>(adjacency_.size()); }
  int vertex_count() const { return alive_count_; }
  int edge_count() const { return edge_count_; }

  bool alive(Vertex v) const { return v >= 0 && v < id_bound() && alive_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;

  // Alive vertices in increasing id order.
  VertexSet vertices() const;
  // Edges in increasing (u, v) order.
  EdgeSet edges() const;

  Vertex add_vertex();
  // Returns false when the edge already exists. Self-loops throw.
  bool add_edge(Vertex a, Vertex b);
  bool remove_edge(Vertex a, Vertex b);
  // Removes all incident edges and marks v dead.
  void remove_vertex(Vertex v);

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> alive_;
  int alive_count_ = 0;
  int edge_count_ = 0;
};

std::vector<VertexSet> connected_components(const Graph& g);

// Components of g with the vertices in `removed` deleted.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);

bool is_connected(const Graph& g);

// Linear-time lowpoint traversal.
EdgeSet find_bridges(const Graph& g);
VertexSet find_cutpoints(const Graph& g);

struct InducedSubgraph {
  Graph graph;                     // compact ids 0..|s|-1
  std::vector<Vertex> to_original; // new id -> old id
  std::vector<Vertex> to_local;    // old id -> new id, -1 outside s
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Restricts g to `keep` without renumbering: every other vertex is deleted.
Graph restrict_to(const Graph& g, const VertexSet& keep);

bool contains(const VertexSet& s, Vertex v);

std::string to_string(const Edge& e);

}  // namespace mist
