#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "mist/errors.hpp"
#include "mist/generate.hpp"
#include "mist/graph.hpp"
#include "test_support.hpp"

using namespace mist;
using namespace mist::testing;

namespace {

// Bridges and cut points by deleting each candidate and recounting components.
EdgeSet bridges_by_removal(const Graph& g) {
  EdgeSet out;
  const auto base = connected_components(g).size();
  for (const Edge& e : g.edges()) {
    Graph h = g;
    h.remove_edge(e.u, e.v);
    if (connected_components(h).size() > base) out.push_back(e);
  }
  return out;
}

VertexSet cutpoints_by_removal(const Graph& g) {
  VertexSet out;
  const auto base = connected_components(g).size();
  for (Vertex v : g.vertices()) {
    if (components_without(g, {v}).size() > base) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Graph, AdjacencyIsSortedAndSymmetric) {
  Graph g(5);
  EXPECT_TRUE(g.add_edge(3, 1));
  EXPECT_TRUE(g.add_edge(1, 0));
  EXPECT_TRUE(g.add_edge(1, 4));
  EXPECT_FALSE(g.add_edge(0, 1));
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  auto n1 = g.neighbors(1);
  EXPECT_EQ(std::vector<Vertex>(n1.begin(), n1.end()), (std::vector<Vertex>{0, 3, 4}));
  for (Vertex v : g.vertices())
    for (Vertex u : g.neighbors(v)) EXPECT_TRUE(g.has_edge(u, v));
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.degree(1), 3);
}

TEST(Graph, RemoveVertexKeepsIdsReserved) {
  Graph g = path_graph(4);
  g.remove_vertex(1);
  EXPECT_EQ(g.id_bound(), 4);
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_FALSE(g.alive(1));
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.vertices(), (VertexSet{0, 2, 3}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(g.remove_edge(2, 3));
  EXPECT_FALSE(g.remove_edge(2, 3));
}

TEST(Graph, ConnectedComponents) {
  EXPECT_EQ(connected_components(path_graph(3)).size(), 1u);
  EXPECT_EQ(connected_components(Graph(2)), (std::vector<VertexSet>{{0}, {1}}));
  const Graph two = make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(connected_components(two), (std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(Graph, Bridges) {
  EXPECT_TRUE(find_bridges(cycle_graph(3)).empty());
  EXPECT_EQ(find_bridges(path_graph(3)), (EdgeSet{{0, 1}, {1, 2}}));
  const Graph joined = make(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(find_bridges(joined), (EdgeSet{{2, 3}}));
  EXPECT_EQ(find_bridges(joined), bridges_by_removal(joined));
}

TEST(Graph, Cutpoints) {
  EXPECT_TRUE(find_cutpoints(cycle_graph(4)).empty());
  EXPECT_EQ(find_cutpoints(path_graph(3)), (VertexSet{1}));
  const Graph bowtie = make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_EQ(find_cutpoints(bowtie), (VertexSet{2}));
  EXPECT_EQ(find_cutpoints(bowtie), cutpoints_by_removal(bowtie));
}

TEST(Graph, BridgesAndCutpointsMatchRemovalOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + uniform_below(rng, 14);
    Graph g(n);
    const double p = 0.1 + 0.3 * uniform_unit(rng);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (uniform_unit(rng) < p) g.add_edge(a, b);
    if (n > 3 && i % 3 == 0) g.remove_vertex(uniform_below(rng, n));
    EXPECT_EQ(find_bridges(g), bridges_by_removal(g));
    EXPECT_EQ(find_cutpoints(g), cutpoints_by_removal(g));
  }
}

TEST(Graph, InducedSubgraph) {
  const auto tri = induced_subgraph(complete_graph(4), {0, 1, 2});
  EXPECT_EQ(tri.graph, cycle_graph(3));
  EXPECT_EQ(tri.to_original, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(tri.to_local[3], -1);

  EXPECT_EQ(induced_subgraph(cycle_graph(5), {}).graph.vertex_count(), 0);

  const auto part = induced_subgraph(cycle_graph(5), {0, 1, 3});
  EXPECT_EQ(part.graph.vertex_count(), 3);
  EXPECT_EQ(part.graph.edges(), (EdgeSet{{0, 1}}));
  EXPECT_EQ(part.graph.degree(part.to_local[3]), 0);
}

TEST(Graph, RestrictKeepsIds) {
  const Graph r = restrict_to(cycle_graph(5), {0, 1, 3});
  EXPECT_EQ(r.id_bound(), 5);
  EXPECT_EQ(r.vertices(), (VertexSet{0, 1, 3}));
  EXPECT_EQ(r.edges(), (EdgeSet{{0, 1}}));
}
