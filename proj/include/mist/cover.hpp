#pragma once

#include <span>
#include <vector>

#include "mist/graph.hpp"

namespace mist {

enum class ComponentKind {
  Path,
  Cycle,
  Tree,    // acyclic, not a path
  Cyclic,  // contains a cycle but is not one; never valid in a cover or forest
};

const char* to_string(ComponentKind kind);

struct Component {
  int id = 0;
  ComponentKind kind = ComponentKind::Path;
  // Path: walk order starting at the smaller endpoint.
  // Cycle: walk order starting at the smallest vertex towards its smaller neighbor.
  // Otherwise: increasing ids.
  std::vector<Vertex> vertices;
  int edge_count = 0;

  int length() const { return edge_count; }
  int size() const { return static_cast<int>(vertices.size()); }
  bool is_path() const { return kind == ComponentKind::Path; }
  bool is_cycle() const { return kind == ComponentKind::Cycle; }
  bool is_tree() const { return kind == ComponentKind::Path || kind == ComponentKind::Tree; }
};

struct Decomposition {
  std::vector<Component> components;  // ordered by smallest member id
  std::vector<int> component_of;      // vertex id -> component index, -1 for dead ids

  const Component& of(Vertex v) const { return components[component_of[v]]; }
};

// Spanning subgraph of a host graph. Used for path-cycle covers and for the
// tree-cycle forests the transform stages grow out of them.
class Cover {
 public:
  Cover() = default;
  explicit Cover(const Graph& host);

  static Cover from_edges(const Graph& host, std::span<const Edge> edges);

  const Graph& subgraph() const { return sub_; }
  int edge_count() const { return sub_.edge_count(); }
  int degree(Vertex v) const { return sub_.degree(v); }
  bool has_edge(Vertex a, Vertex b) const { return sub_.has_edge(a, b); }
  std::span<const Vertex> neighbors(Vertex v) const { return sub_.neighbors(v); }
  EdgeSet edges() const { return sub_.edges(); }

  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  Decomposition decompose() const;

  bool operator==(const Cover&) const = default;

 private:
  Graph sub_;
};

// Every alive host vertex covered, edges from the host, degree <= 2
// (<= 1 on `forced_leaves`), components are paths or cycles, no 3-cycle.
bool is_tfpcc(const Cover& c, const Graph& host, const VertexSet& forced_leaves = {});

// Components are trees or cycles of length >= 4, edges from the host.
bool is_tftcc(const Cover& c, const Graph& host);

// Internal vertices (degree >= 2) and leaves (degree <= 1) of one component.
int internal_count(const Cover& c, const Component& comp);
int leaf_count(const Cover& c, const Component& comp);

// A vertex of `vertices` with a host neighbor outside the set.
bool is_port(const Graph& host, const VertexSet& sorted_vertices, Vertex v);

// Path component whose endpoints both have no host neighbor outside it.
bool is_dead_path(const Graph& host, const Component& path);

}  // namespace mist
