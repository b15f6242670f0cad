#include <gtest/gtest.h>

#include <random>

#include "mist/cover_solver.hpp"
#include "mist/errors.hpp"
#include "mist/generate.hpp"
#include "mist/preprocess.hpp"
#include "mist/reduction.hpp"
#include "test_support.hpp"

using namespace mist;
using namespace mist::testing;

namespace {

const Predicate* named(const std::vector<Predicate>& ps, const std::string& name) {
  for (const Predicate& p : ps)
    if (p.name == name) return &p;
  return nullptr;
}

int component_count(const Cover& c) { return static_cast<int>(c.decompose().components.size()); }

void expect_edge_accounting(const CoverRewrite& r) {
  switch (r.kind) {
    case RewriteKind::Op13:
      EXPECT_EQ(r.removed.size(), 0u);
      EXPECT_EQ(r.added.size(), 1u);
      break;
    case RewriteKind::Op14:
      EXPECT_EQ(r.removed.size(), 1u);
      EXPECT_EQ(r.added.size(), 2u);
      break;
    default:
      EXPECT_EQ(r.removed.size(), r.added.size());
  }
}

}  // namespace

TEST(Rewrite, Op6SplicesCycleIntoPath) {
  // 4-cycle 0..3 and path 4-5 with 4 adjacent to 0
  const Graph g = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {4, 0}});
  const Cover c = Cover::from_edges(g, EdgeSet{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}});
  const auto r = find_rewrite(c, g, PrepMode::Simple);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kind, RewriteKind::Op6);
  Cover after = c;
  apply_rewrite(after, *r);
  EXPECT_EQ(after.edge_count(), 5);
  EXPECT_EQ(component_count(after), 1);
  EXPECT_TRUE(after.decompose().components[0].is_path());
  EXPECT_GT(measure(after, g), measure(c, g));
}

TEST(Rewrite, Op13JoinsPathEnds) {
  const Graph g = path_graph(4);
  const Cover c = Cover::from_edges(g, EdgeSet{{0, 1}, {2, 3}});
  EXPECT_FALSE(find_rewrite(c, g, PrepMode::Simple));
  const auto r = find_rewrite(c, g, PrepMode::Refined);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kind, RewriteKind::Op13);
  EXPECT_EQ(r->added, (EdgeSet{{1, 2}}));
  expect_edge_accounting(*r);
}

TEST(Rewrite, Op14AbsorbsIsolatedVertex) {
  // path 0-1-2-3, isolated 4 adjacent to 1 and 2
  const Graph g = make(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
  const Cover c = Cover::from_edges(g, EdgeSet{{0, 1}, {1, 2}, {2, 3}});
  const auto r = find_rewrite(c, g, PrepMode::Refined);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kind, RewriteKind::Op14);
  EXPECT_EQ(r->removed, (EdgeSet{{1, 2}}));
  EXPECT_EQ(r->added, (EdgeSet{{1, 4}, {2, 4}}));
  Cover after = c;
  apply_rewrite(after, *r);
  EXPECT_EQ(after.edge_count(), c.edge_count() + 1);
  EXPECT_TRUE(is_tfpcc(after, g));
}

TEST(Rewrite, Op5RevivesDeadPath) {
  // triangle 0,1,2 covered by the dead path 0-1-2; 1 also sees the path 3-4
  const Graph g = make(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {3, 4}});
  const Cover c = Cover::from_edges(g, EdgeSet{{0, 1}, {1, 2}, {3, 4}});
  const auto r = find_rewrite(c, g, PrepMode::Simple);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kind, RewriteKind::Op5);
  const PreprocessResult out = preprocess(c, g, PrepMode::Simple);
  const auto ps = preprocess_predicates(out.cover, g, PrepMode::Simple, {}, c.edge_count());
  const Predicate* alive = named(ps, "paths of length at most 3 are alive");
  ASSERT_NE(alive, nullptr);
  EXPECT_TRUE(alive->passed);
  EXPECT_FALSE(find_rewrite(out.cover, g, PrepMode::Simple));
}

TEST(Preprocess, LoneCycleIsAFixpoint) {
  const Graph g = cycle_graph(5);
  const Cover c = preferred_tfpcc(g);
  const PreprocessResult out = preprocess(c, g, PrepMode::Refined);
  EXPECT_TRUE(out.log.empty());
  EXPECT_EQ(out.cover, c);
}

TEST(Preprocess, RejectsInvalidCover) {
  const Graph g = complete_graph(4);
  const Cover bad = Cover::from_edges(g, EdgeSet{{0, 1}, {0, 2}, {0, 3}});
  EXPECT_THROW(preprocess(bad, g, PrepMode::Simple), MistError);
}

TEST(Preprocess, CycleAndAdjacentPathMerge) {
  // 5-cycle 0..4 with a pendant path 5-6 hanging off 2
  const Graph g = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}, {5, 6}});
  const Cover c = Cover::from_edges(g, EdgeSet{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 6}});
  const PreprocessResult out = preprocess(c, g, PrepMode::Simple);
  EXPECT_LT(component_count(out.cover), component_count(c));
  EXPECT_GE(out.cover.edge_count(), c.edge_count());
  EXPECT_TRUE(all_passed(preprocess_predicates(out.cover, g, PrepMode::Simple, {}, c.edge_count(),
                                               opt_spanning_tree(g).weight)));
}

TEST(Preprocess, IrreducibleInstancesReachPredicates) {
  std::mt19937_64 rng(21);
  int rewrites = 0, checked = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 9 + i % 4;
    const Graph g = i % 4 == 3 ? generate(Family::Twins, n, 0.5, 700 + i)
                               : random_connected_gnp(n, 0.2 + 0.2 * uniform_unit(rng), rng);
    for (PrepMode mode : {PrepMode::Simple, PrepMode::Refined}) {
      const bool refined = mode == PrepMode::Refined;
      for (const Graph& h : reduce_to_fixpoint(g, refined ? RuleSet::refined() : RuleSet::simple()).irreducible) {
        if (h.vertex_count() <= 8) continue;
        ++checked;
        const std::vector<PiPair> pairs = refined ? compute_pi_pairs(h) : std::vector<PiPair>{};
        const Cover start = refined ? preferred_tfpcc(h, pairs, ExactTfpccSolver()) : max_tfpcc_exact(h);
        const PreprocessResult out = preprocess(start, h, mode);
        Cover replay = start;
        PrepMeasure last = measure(replay, h);
        for (const CoverRewrite& r : out.log) {
          expect_edge_accounting(r);
          apply_rewrite(replay, r);
          ASSERT_TRUE(brute_is_tfpcc(h, replay.edges()));
          const PrepMeasure now = measure(replay, h);
          ASSERT_GT(now, last);
          last = now;
        }
        rewrites += static_cast<int>(out.log.size());
        ASSERT_EQ(replay, out.cover);
        ASSERT_FALSE(find_rewrite(out.cover, h, mode));
        const auto ps =
            preprocess_predicates(out.cover, h, mode, pairs, start.edge_count(), opt_spanning_tree(h).weight);
        for (const Predicate& p : ps) ASSERT_TRUE(p.passed) << p.name << ": " << p.detail;
      }
    }
  }
  EXPECT_GT(checked, 50);
  EXPECT_GT(rewrites, 0);
}

TEST(Predicates, CorruptedCoverFails) {
  // path ends 0 and 4 see each other, which no fixpoint allows
  const Graph g = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {0, 4}});
  const Cover dead = Cover::from_edges(g, EdgeSet{{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  const auto ps = preprocess_predicates(dead, g, PrepMode::Simple, {}, 4);
  EXPECT_FALSE(all_passed(ps));
  const auto drop = preprocess_predicates(dead, g, PrepMode::Simple, {}, 5);
  const Predicate* kept = named(drop, "cover kept its edge count");
  ASSERT_NE(kept, nullptr);
  EXPECT_FALSE(kept->passed);
}
