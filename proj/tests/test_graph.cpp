#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "selfsim/cell_model.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/substitution.hpp"

using namespace selfsim;

namespace {

FiniteGraph path3() {
  std::vector<Edge> e{{0, 1}, {1, 2}};
  return FiniteGraph::from_edges(3, e);
}

FiniteGraph triangle() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  return FiniteGraph::from_edges(3, e);
}

FiniteGraph gasket() { return builtin("sierpinski").graph(); }

}  // namespace

TEST(FiniteGraph, MergesDuplicatesAndSortsRows) {
  std::vector<Edge> e{{2, 0}, {0, 2}, {1, 0}};
  auto g = FiniteGraph::from_edges(3, e);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(FiniteGraph, RejectsLoopsAndBadIds) {
  std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(FiniteGraph::from_edges(2, loop), InputError);
  std::vector<Edge> far{{0, 5}};
  EXPECT_THROW(FiniteGraph::from_edges(2, far), InputError);
}

TEST(Bfs, Path) {
  auto g = path3();
  std::vector<VertexId> src{0};
  auto d = bfs_distances(g, src);
  EXPECT_EQ(d.at(0), 0u);
  EXPECT_EQ(d.at(1), 1u);
  EXPECT_EQ(d.at(2), 2u);
}

TEST(Bfs, AllSourcesGiveZero) {
  auto g = gasket();
  std::vector<VertexId> all{0, 1, 2, 3, 4, 5};
  auto d = bfs_distances(g, all);
  for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(d.at(v), 0u);
}

TEST(Bfs, GasketCorner) {
  auto g = gasket();
  std::vector<VertexId> src{0};
  auto d = bfs_distances(g, src);
  EXPECT_EQ(d.at(1), 2u);
  EXPECT_EQ(d.at(2), 2u);
  EXPECT_EQ(d.at(3), 1u);
  EXPECT_EQ(d.at(5), 1u);
  EXPECT_EQ(d.at(4), 2u);
}

TEST(Bfs, UnreachableIsReported) {
  std::vector<Edge> e{{0, 1}};
  auto g = FiniteGraph::from_edges(3, e);
  std::vector<VertexId> src{0};
  auto d = bfs_distances(g, src);
  EXPECT_FALSE(d.reachable(2));
  EXPECT_FALSE(d[2].has_value());
  EXPECT_THROW(d.at(2), std::out_of_range);
  EXPECT_EQ(d.max_finite(), 1u);
}

TEST(Bfs, MatchesOracleOnDeepGasket) {
  auto hg = generate(builtin("sierpinski"), 4);
  auto adj = oracle::adjacency(hg.graph());
  for (VertexId s : {0u, 7u, 40u}) {
    std::vector<VertexId> src{s};
    auto d = bfs_distances(hg.graph(), src);
    auto ref = oracle::bfs(adj, s);
    for (VertexId v = 0; v < hg.vertex_count(); ++v) EXPECT_EQ(int(d.at(v)), ref[v]);
  }
}

TEST(Components, Examples) {
  auto p = path3();
  std::vector<VertexId> mid{1};
  EXPECT_EQ(components(p, mid), (std::vector<std::vector<VertexId>>{{0}, {2}}));
  EXPECT_EQ(components(p, {}), (std::vector<std::vector<VertexId>>{{0, 1, 2}}));
  std::vector<VertexId> corners{0, 1, 2};
  EXPECT_EQ(components(gasket(), corners), (std::vector<std::vector<VertexId>>{{3, 4, 5}}));
}

TEST(Boundary, Examples) {
  auto empty = boundary(gasket(), {});
  EXPECT_TRUE(empty.theta.empty());
  EXPECT_TRUE(empty.delta.empty());
  EXPECT_TRUE(empty.closure.empty());

  std::vector<VertexId> mids{3, 4, 5};
  auto b = boundary(gasket(), mids);
  EXPECT_EQ(b.theta.size(), 3u);
  EXPECT_EQ(b.delta.size(), 6u);
  EXPECT_EQ(b.closure.size(), 6u);

  auto diamond = builtin("diamond_open").graph();
  std::vector<VertexId> inner{2, 3};
  auto d = boundary(diamond, inner);
  EXPECT_EQ(d.theta, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(d.delta.size(), 4u);
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume(gasket(), {}), 0u);
  std::vector<VertexId> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(volume(gasket(), all), 18u);
  std::vector<VertexId> mids{3, 4, 5};
  EXPECT_EQ(volume(gasket(), mids), 12u);
}

TEST(Volume, TwiceEdgeCountOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 30;
    std::vector<Edge> e;
    for (int i = 0; i < 60; ++i) {
      VertexId u = rng() % n, v = rng() % n;
      if (u != v) e.emplace_back(u, v);
    }
    auto g = FiniteGraph::from_edges(n, e);
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(volume(g, all), 2 * g.edge_count());
  }
}

TEST(Reduce, Examples) {
  std::vector<VertexId> ends{0, 2};
  auto r = reduce(path3(), ends);
  EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(r.original_ids, ends);

  std::vector<VertexId> all{0, 1, 2};
  auto flat = reduce(triangle(), all);
  EXPECT_TRUE(flat.edgeless);
  EXPECT_EQ(flat.graph.edge_count(), 0u);
}

TEST(Reduce, GasketLevelTwoGivesLevelOne) {
  auto m = builtin("sierpinski");
  auto g2 = generate(m, 2);
  ASSERT_EQ(g2.vertex_count(), 15u);
  auto kept = level_at_least(g2, 1);
  ASSERT_EQ(kept.size(), 6u);
  auto r = reduce(g2.graph(), kept);
  auto g1 = m.graph();
  std::vector<int> none1(6, 0), none2(6, 0);
  EXPECT_TRUE(isomorphism(r.graph, none1, g1, none2).has_value());
}

TEST(Diameter, Examples) {
  std::vector<Edge> e{{0, 1}};
  EXPECT_EQ(diameter(FiniteGraph::from_edges(2, e)), 1u);
  EXPECT_EQ(diameter(gasket()), 2u);
  EXPECT_EQ(diameter(builtin("tree4").graph()), 3u);
}

TEST(Diameter, ErrorsAndCap) {
  std::vector<Edge> e{{0, 1}};
  EXPECT_THROW(diameter(FiniteGraph::from_edges(3, e)), InputError);
  auto g = generate(builtin("sierpinski"), 3).graph();
  EXPECT_THROW(diameter(g, {.vertex_cap = 10}), CapExceeded);
  EXPECT_EQ(diameter(g, {.vertex_cap = 10, .allow_over_cap = true}), 8u);
}

TEST(Diameter, MatchesOracle) {
  for (const auto& name : builtin_names()) {
    auto hg = generate(builtin(name), 3);
    auto adj = oracle::adjacency(hg.graph());
    int ref = 0;
    for (VertexId v = 0; v < hg.vertex_count(); ++v) ref = std::max(ref, oracle::eccentricity(adj, v));
    EXPECT_EQ(int(diameter(hg.graph())), ref) << name;
  }
}

TEST(Isomorphism, Examples) {
  std::vector<int> l(3, 0);
  auto t = triangle();
  auto map = isomorphism(t, l, t, l);
  ASSERT_TRUE(map);
  EXPECT_TRUE(is_isomorphism(t, l, t, l, *map));
  EXPECT_FALSE(isomorphism(t, l, path3(), l).has_value());
}

TEST(Isomorphism, LabelsRestrictTheMap) {
  auto p = path3();
  std::vector<int> a{1, 0, 0}, b{0, 0, 1};
  auto map = isomorphism(p, a, p, b);
  ASSERT_TRUE(map);
  EXPECT_EQ(*map, (std::vector<VertexId>{2, 1, 0}));
  std::vector<int> c{0, 1, 0};
  EXPECT_FALSE(isomorphism(p, a, p, c).has_value());
}

TEST(Isomorphism, FindsRandomRelabelling) {
  auto hg = generate(builtin("tree4"), 3);
  const auto& g = hg.graph();
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(11));
  std::vector<Edge> moved;
  for (auto [u, v] : g.edges()) moved.emplace_back(perm[u], perm[v]);
  auto h = FiniteGraph::from_edges(g.vertex_count(), moved);
  std::vector<int> l1(hg.levels().begin(), hg.levels().end()), l2(l1.size());
  for (VertexId v = 0; v < l1.size(); ++v) l2[perm[v]] = l1[v];
  auto map = isomorphism(g, l1, h, l2);
  ASSERT_TRUE(map);
  EXPECT_TRUE(is_isomorphism(g, l1, h, l2, *map));
}

TEST(Isomorphism, RejectsWrongMap) {
  auto p = path3();
  std::vector<int> l(3, 0);
  std::vector<VertexId> swap{1, 0, 2};
  EXPECT_FALSE(is_isomorphism(p, l, p, l, swap));
}
