#include "instances.hpp"

#include <uavllt/errors.hpp>
#include <uavllt/oracle.hpp>
#include <uavllt/routing.hpp>

#include <gtest/gtest.h>

#include <string>

namespace uavllt {
namespace {

TEST(MaxMinRoute, WidestBeatsShortest) {
  LinkGraph<int> g;
  g.add_edge(1, 4, 3);
  g.add_edge(1, 2, 20);
  g.add_edge(2, 3, 15);
  g.add_edge(3, 4, 30);
  const auto r = max_min_route(g, 1, 4);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->nodes, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(r->bottleneck_llt, 15.0);
}

TEST(MaxMinRoute, FewerHopsOnEqualBottleneck) {
  LinkGraph<int> g;
  g.add_edge(0, 1, 10);
  g.add_edge(1, 2, 10);
  g.add_edge(2, 5, 10);
  g.add_edge(0, 4, 10);
  g.add_edge(4, 5, 12);
  EXPECT_EQ(max_min_route(g, 0, 5)->nodes, (std::vector<int>{0, 4, 5}));
}

TEST(MaxMinRoute, LexicographicOnEqualHops) {
  LinkGraph<int> g;
  g.add_edge(0, 7, 10);
  g.add_edge(7, 9, 10);
  g.add_edge(0, 3, 10);
  g.add_edge(3, 9, 10);
  EXPECT_EQ(max_min_route(g, 0, 9)->nodes, (std::vector<int>{0, 3, 9}));
}

TEST(MaxMinRoute, UnboundedLinks) {
  LinkGraph<int> g;
  g.add_edge(0, 1, kUnboundedLlt);
  g.add_edge(1, 2, kUnboundedLlt);
  g.add_edge(0, 2, 1000);
  const auto r = max_min_route(g, 0, 2);
  EXPECT_EQ(r->nodes, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(r->bottleneck_llt, kUnboundedLlt);
}

TEST(MaxMinRoute, UnreachableAndErrors) {
  LinkGraph<int> g;
  g.add_edge(0, 1, 5);
  g.add_node(2);
  EXPECT_FALSE(max_min_route(g, 0, 2));
  EXPECT_THROW(max_min_route(g, 0, 3), NodeUnknown);
  EXPECT_THROW(max_min_route(g, 0, 0), Error);
}

TEST(MaxMinRoute, StringIds) {
  LinkGraph<std::string> g;
  g.add_edge("a", "b", 4);
  g.add_edge("b", "c", 6);
  const auto r = max_min_route(g, std::string("a"), std::string("c"));
  EXPECT_EQ(r->nodes, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(r->bottleneck_llt, 4.0);
}

TEST(MaxMinRoute, MatchesEnumeration) {
  Rng rng(11);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 10;
    const auto g = testing::random_graph(rng, n, 0.35);
    for (int src = 0; src < n; src += 2) {
      const int dst = (src + 1 + trial) % n;
      if (dst == src)
        continue;
      const auto want = enumerate_best_route(g, src, dst);
      const auto got = max_min_route(g, src, dst);
      ASSERT_EQ(got.has_value(), want.has_value());
      if (want) {
        EXPECT_EQ(*got, *want) << "trial " << trial;
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 200);
}

} // namespace
} // namespace uavllt
