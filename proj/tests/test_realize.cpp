#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "digraphical/io.hpp"
#include "digraphical/oracle.hpp"
#include "digraphical/realize.hpp"
#include "expect_errc.hpp"
#include "support.hpp"

namespace digraphical {
namespace {

using testing::bds;

TEST(Undirected, Examples) {
  EXPECT_TRUE(is_graphical_undirected(std::vector<int>{2, 2, 2}));
  EXPECT_TRUE(is_graphical_undirected(std::vector<int>{3, 1, 1, 1}));
  EXPECT_TRUE(is_graphical_undirected(std::vector<int>{}));
  // Brute force first, then the greedy answer.
  ASSERT_FALSE(testing::undirected_oracle({3, 3, 1, 1}));
  EXPECT_FALSE(is_graphical_undirected(std::vector<int>{3, 3, 1, 1}));
}

TEST(Undirected, AgreesWithBruteForce) {
  // n <= 6, degrees 1..5 (non-increasing, so each multiset once).
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<int> d(n, 1);
    for (;;) {
      std::vector<int> sorted = d;
      std::sort(sorted.rbegin(), sorted.rend());
      if (sorted == d) {
        EXPECT_EQ(is_graphical_undirected(d), testing::undirected_oracle(d)) << ::testing::PrintToString(d);
      }
      std::size_t j = 0;
      while (j < n && d[j] == 5) d[j++] = 1;
      if (j == n) break;
      ++d[j];
    }
  }
}

TEST(Bigraphical, Examples) {
  auto cyc = testing::ones(3);
  ASSERT_EQ(oracle::count(cyc, 3), 2u);
  EXPECT_TRUE(is_bigraphical(cyc));
  EXPECT_TRUE(is_bigraphical(bds({{1, 2, 0}, {2, 0, 1}, {3, 0, 1}})));
  EXPECT_FALSE(is_bigraphical(bds({{1, 1, 0}, {2, 1, 0}, {3, 0, 1}})));
  EXPECT_TRUE(is_bigraphical(BiDegreeSequence{}));
  // Only in-degrees: caught by the degree-sum check.
  EXPECT_FALSE(is_bigraphical(bds({{1, 0, 1}, {2, 0, 1}})));
}

TEST(Bigraphical, OracleEquivalenceN3) {
  for (const auto& s : testing::all_sequences(3, 2)) {
    EXPECT_EQ(is_bigraphical(s), oracle::count(s, 3) > 0) << to_string(s);
  }
}

TEST(Bigraphical, StrategyIndependence) {
  for (const auto& s : testing::all_sequences(3, 2)) {
    EXPECT_EQ(is_bigraphical(s, PivotStrategy::MaxOut), is_bigraphical(s, PivotStrategy::MinIndex));
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = bds_of(testing::random_digraph(8, 0.3, rng));
    EXPECT_TRUE(is_bigraphical(s, PivotStrategy::MinIndex));
    EXPECT_TRUE(is_bigraphical(s, PivotStrategy::MaxOut));
  }
}

TEST(RealizeGreedy, ThreeCycleUnderDefaultRules) {
  // Round 0: pivot 1 (ties broken by id) -> 2. Round 1: pivot 3 (more in-degree
  // than 2) -> 1. Round 2: pivot 2 -> 3.
  auto r = realize_greedy(bds({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.graph->arcs(), (std::vector<Arc>{{1, 2}, {2, 3}, {3, 1}}));
  EXPECT_FALSE(r.failed_step);
}

TEST(RealizeGreedy, OutStarAndPigeonhole) {
  auto star = realize_greedy(bds({{1, 2, 0}, {2, 0, 1}, {3, 0, 1}}));
  ASSERT_TRUE(star.ok());
  EXPECT_EQ(star.graph->arcs(), (std::vector<Arc>{{1, 2}, {1, 3}}));

  auto bad = realize_greedy(bds({{1, 2, 2}, {2, 1, 1}}));
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(bad.failed_step, 0u);
}

TEST(RealizeGreedy, ReportsFailingRound) {
  // Sums match and degrees fit, but vertex 3 needs three in-arcs while only
  // vertices 0 and 1 have out-arcs.
  auto s = BiDegreeSequence::from_pairs({{2, 0}, {2, 0}, {0, 1}, {0, 3}});
  ASSERT_EQ(oracle::count(s, 4), 0u);
  auto r = realize_greedy(s);
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(r.failed_step);
  EXPECT_EQ(*r.failed_step, 1u);
}

TEST(RealizeGreedy, SoundnessOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing::random_digraph(9, 0.3, rng);
    for (auto strategy : {PivotStrategy::MaxOut, PivotStrategy::MinIndex}) {
      auto r = realize_greedy(bds_of(g), strategy);
      ASSERT_TRUE(r.ok());
      EXPECT_TRUE(r.graph->is_simple());
      EXPECT_EQ(bds_of(*r.graph), bds_of(g));
    }
  }
}

TEST(FNormalOrder, Examples) {
  EXPECT_EQ(f_normal_order({bds({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}), 3, {2}}).order,
            (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(f_normal_order({bds({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 1, 1}}), 4, {1}}).order,
            (std::vector<VertexId>{2, 3, 1, 4}));
  auto s = bds({{1, 0, 2}, {2, 3, 2}, {3, 1, 1}, {4, 2, 1}});
  EXPECT_EQ(f_normal_order({s, 4, {}}), normal_order(s, 4));
}

TEST(FNormalOrder, RejectsBadInstances) {
  auto s = testing::ones(3);
  expect_errc(Errc::InvalidInstance, [&] { f_normal_order({s, 9, {}}); });
  expect_errc(Errc::InvalidInstance, [&] { f_normal_order({s, 2, {2}}); });
  expect_errc(Errc::InvalidInstance, [&] { f_normal_order({s, 2, {7}}); });
}

TEST(FPrefix, Examples) {
  auto s = bds({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}});
  EXPECT_EQ(f_prefix({s, 3, {2}}, 1).members, (std::vector<VertexId>{1}));
  expect_errc(Errc::NotEnoughAllowedVertices, [&] { f_prefix({s, 3, {1, 2}}, 1); });

  auto t = bds({{1, 0, 2}, {2, 3, 2}, {3, 1, 1}, {4, 2, 1}});
  auto ord = normal_order(t, 4);
  EXPECT_EQ(f_prefix({t, 4, {}}, 2), leftmost_pon(ord, 2));
}

TEST(Restricted, Examples) {
  auto s = bds({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}});
  // Witness 3->1, 1->2, 2->3 avoids 3->2; check the oracle agrees (ids shifted to 0..2).
  ASSERT_TRUE(oracle::restricted({testing::ones(3), 2, {1}}, 3));
  EXPECT_TRUE(is_feasible_restricted({s, 3, {2}}));
  EXPECT_FALSE(is_feasible_restricted({s, 3, {1, 2}}));
  EXPECT_EQ(is_feasible_restricted({s, 3, {}}), is_bigraphical(s));
}

TEST(Restricted, EmptyFMatchesBigraphical) {
  for (const auto& s : testing::all_sequences(3, 2)) {
    for (VertexId p : s.ids()) {
      if (s.degree(p).out_deg == 0) continue;
      EXPECT_EQ(is_feasible_restricted({s, p, {}}), is_bigraphical(s)) << to_string(s);
    }
  }
}

TEST(RealizeGreedy, MissesFixtureRealization) {
  std::ifstream in(DIGRAPHICAL_FIXTURE_DIR "/greedy_unreachable.edges");
  ASSERT_TRUE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  auto g = io::parse_edgelist(buf.str());
  auto s = bds_of(g);
  ASSERT_GT(oracle::count(s, 5), 1u);
  EXPECT_FALSE(testing::greedy_reachable(s).contains(g.arcs()));
  for (auto strategy : {PivotStrategy::MaxOut, PivotStrategy::MinIndex}) {
    auto r = realize_greedy(s, strategy);
    ASSERT_TRUE(r.ok());
    EXPECT_NE(r.graph->arcs(), g.arcs());
  }
}

}  // namespace
}  // namespace digraphical
