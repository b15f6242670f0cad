#include "mist/cover.hpp"

#include <algorithm>

#include "mist/errors.hpp"

namespace mist {

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Path: return "path";
    case ComponentKind::Cycle: return "cycle";
    case ComponentKind::Tree: return "tree";
    case ComponentKind::Cyclic: return "cyclic";
  }
  return "?";
}

Cover::Cover(const Graph& host) : sub_(host.id_bound()) {
  for (Vertex v = 0; v < host.id_bound(); ++v)
    if (!host.alive(v)) sub_.remove_vertex(v);
}

Cover Cover::from_edges(const Graph& host, std::span<const Edge> edges) {
  Cover c(host);
  for (const Edge& e : edges) c.add_edge(e.u, e.v);
  return c;
}

void Cover::add_edge(Vertex a, Vertex b) {
  if (!sub_.add_edge(a, b))
    throw MistError(ErrorKind::InternalInvariant, "cover already contains " + to_string(make_edge(a, b)));
}

void Cover::remove_edge(Vertex a, Vertex b) {
  if (!sub_.remove_edge(a, b))
    throw MistError(ErrorKind::InternalInvariant, "cover does not contain " + to_string(make_edge(a, b)));
}

namespace {

std::vector<Vertex> walk_from(const Graph& sub, Vertex start, Vertex first_step) {
  std::vector<Vertex> order{start};
  Vertex prev = start;
  Vertex cur = first_step;
  while (cur != -1 && cur != start) {
    order.push_back(cur);
    Vertex next = -1;
    for (Vertex y : sub.neighbors(cur))
      if (y != prev) {
        next = y;
        break;
      }
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

Decomposition Cover::decompose() const {
  Decomposition d;
  auto comps = connected_components(sub_);
  d.component_of.assign(sub_.id_bound(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Component c;
    c.id = static_cast<int>(i);
    int degree_sum = 0;
    int max_degree = 0;
    for (Vertex v : comps[i]) {
      d.component_of[v] = c.id;
      degree_sum += sub_.degree(v);
      max_degree = std::max(max_degree, sub_.degree(v));
    }
    c.edge_count = degree_sum / 2;
    const int n = static_cast<int>(comps[i].size());
    if (c.edge_count == n - 1) {
      c.kind = max_degree <= 2 ? ComponentKind::Path : ComponentKind::Tree;
    } else if (c.edge_count == n && max_degree == 2) {
      c.kind = ComponentKind::Cycle;
    } else {
      c.kind = ComponentKind::Cyclic;
    }
    if (c.kind == ComponentKind::Path) {
      if (n == 1) {
        c.vertices = comps[i];
      } else {
        Vertex start = -1;
        for (Vertex v : comps[i])
          if (sub_.degree(v) == 1) {
            start = v;
            break;
          }
        c.vertices = walk_from(sub_, start, sub_.neighbors(start)[0]);
      }
    } else if (c.kind == ComponentKind::Cycle) {
      Vertex start = comps[i].front();
      c.vertices = walk_from(sub_, start, sub_.neighbors(start)[0]);
    } else {
      c.vertices = comps[i];
    }
    d.components.push_back(std::move(c));
  }
  return d;
}

bool is_tfpcc(const Cover& c, const Graph& host, const VertexSet& forced_leaves) {
  if (c.subgraph().id_bound() != host.id_bound()) return false;
  for (Vertex v = 0; v < host.id_bound(); ++v) {
    if (host.alive(v) != c.subgraph().alive(v)) return false;
    if (!host.alive(v)) continue;
    if (c.degree(v) > 2) return false;
    if (c.degree(v) > 1 && contains(forced_leaves, v)) return false;
  }
  for (const Edge& e : c.edges())
    if (!host.has_edge(e.u, e.v)) return false;
  for (const Component& comp : c.decompose().components) {
    if (comp.kind == ComponentKind::Cycle && comp.length() == 3) return false;
    if (comp.kind != ComponentKind::Path && comp.kind != ComponentKind::Cycle) return false;
  }
  return true;
}

bool is_tftcc(const Cover& c, const Graph& host) {
  if (c.subgraph().id_bound() != host.id_bound()) return false;
  for (Vertex v = 0; v < host.id_bound(); ++v)
    if (host.alive(v) != c.subgraph().alive(v)) return false;
  for (const Edge& e : c.edges())
    if (!host.has_edge(e.u, e.v)) return false;
  for (const Component& comp : c.decompose().components) {
    if (comp.kind == ComponentKind::Cyclic) return false;
    if (comp.kind == ComponentKind::Cycle && comp.length() < 4) return false;
  }
  return true;
}

int internal_count(const Cover& c, const Component& comp) {
  int w = 0;
  for (Vertex v : comp.vertices)
    if (c.degree(v) >= 2) ++w;
  return w;
}

int leaf_count(const Cover& c, const Component& comp) {
  int l = 0;
  for (Vertex v : comp.vertices)
    if (c.degree(v) <= 1) ++l;
  return l;
}

bool is_port(const Graph& host, const VertexSet& sorted_vertices, Vertex v) {
  for (Vertex u : host.neighbors(v))
    if (!contains(sorted_vertices, u)) return true;
  return false;
}

bool is_dead_path(const Graph& host, const Component& path) {
  VertexSet members = path.vertices;
  std::sort(members.begin(), members.end());
  return !is_port(host, members, path.vertices.front()) && !is_port(host, members, path.vertices.back());
}

}  // namespace mist
