#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "selfsim/invariants.hpp"

using namespace selfsim;

namespace {

const Measurement* row(const TheoremReport& r, int n, const std::string& quantity) {
  for (const auto& m : r.measurements)
    if (m.n == n && m.quantity == quantity) return &m;
  return nullptr;
}

std::int64_t measured(const TheoremReport& r, int n, const std::string& quantity) {
  const auto* m = row(r, n, quantity);
  if (!m) ADD_FAILURE() << "no row " << quantity << " at n=" << n;
  return m ? std::get<std::int64_t>(m->measured) : -1;
}

// 1-cells and reduced graph on level >= 1 from scratch: flood fill the
// level-0 vertices, collect each component's boundary.
struct LevelOneCensus {
  std::vector<std::size_t> cells;
  std::vector<std::set<VertexId>> reduced;
};

LevelOneCensus census_oracle(const HierarchicalGraph& hg) {
  auto adj = oracle::adjacency(hg.graph());
  std::size_t n = adj.size();
  LevelOneCensus out{std::vector<std::size_t>(n, 0), std::vector<std::set<VertexId>>(n)};
  std::vector<char> seen(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s] || hg.level(s) >= 1) continue;
    std::vector<VertexId> stack{s};
    std::set<VertexId> bnd;
    seen[s] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v]) {
        if (hg.level(w) >= 1) {
          bnd.insert(w);
        } else if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (auto a : bnd) {
      ++out.cells[a];
      for (auto b : bnd)
        if (a != b) out.reduced[a].insert(b);
    }
  }
  return out;
}

}  // namespace

TEST(Census, Gasket) {
  auto c = degree_census(generate(builtin("sierpinski"), 4));
  EXPECT_EQ(c.b, 2u);
  EXPECT_EQ(c.c, 2u);
  EXPECT_EQ(c.max_degree, 4u);
}

TEST(Census, Line) {
  auto c = degree_census(generate(builtin("line"), 4));
  EXPECT_EQ(c.b, 1u);
  EXPECT_EQ(c.c, 2u);
  EXPECT_EQ(c.max_degree, 2u);
}

TEST(Census, CellsMatchOracle) {
  for (const auto& name : builtin_names()) {
    auto hg = generate(builtin(name), 4);
    auto c = degree_census(hg);
    auto ref = census_oracle(hg);
    for (VertexId v = 0; v < hg.vertex_count(); ++v) EXPECT_EQ(c.cells[v], ref.cells[v]) << name << v;
  }
}

TEST(DeepParameters, GasketStabilizes) {
  auto p = deep_parameters(builtin("sierpinski"), 4);
  EXPECT_EQ(p.c, 2u);
  EXPECT_TRUE(p.c_stabilized);
  EXPECT_EQ(p.max_degree, 4u);
  EXPECT_TRUE(p.max_degree_stabilized);
  EXPECT_EQ(p.nu_deep, 2u);
  EXPECT_EQ(p.lambda_deep, 2u);
  EXPECT_THROW(deep_parameters(builtin("line"), 2), InputError);
}

TEST(DeepParameters, DiamondKeepsGrowing) {
  auto p = deep_parameters(builtin("diamond_open"), 5);
  EXPECT_EQ(p.b, 2u);
  EXPECT_FALSE(p.c_stabilized);
  EXPECT_FALSE(p.max_degree_stabilized);
  // marching boundary vertices of level n-1 have degree 3*2^(n-1)
  EXPECT_EQ(p.max_degree, 3u * 16);
}

TEST(DeepParameters, Tree4) {
  auto p = deep_parameters(builtin("tree4"), 4);
  EXPECT_EQ(p.lambda_deep, 3u);
  EXPECT_EQ(p.nu_deep, 2u);
  EXPECT_TRUE(p.max_degree_stabilized);
}

TEST(EdgeBoundary, DiamondDoubles) {
  auto r = check_edge_boundary(builtin("diamond_open"), 6);
  EXPECT_TRUE(r.passed());
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(measured(r, n, "|dC_n|"), std::int64_t{1} << (n + 1));
}

TEST(EdgeBoundary, GasketConstant) {
  auto r = check_edge_boundary(builtin("sierpinski"), 6);
  EXPECT_TRUE(r.passed());
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(measured(r, n, "|dC_n|"), 6);
}

TEST(EdgeBoundary, LopsidedInapplicable) {
  auto r = check_edge_boundary(builtin("lopsided3"), 4);
  EXPECT_EQ(r.verdict, Verdict::Inapplicable);
  ASSERT_FALSE(r.notes.empty());
}

TEST(BoundedGeometry, AllTrueForBoundedModels) {
  for (auto name : {"sierpinski", "line", "tree4"}) {
    auto g = check_bounded_geometry(builtin(name), 4);
    EXPECT_TRUE(g.hypothesis_met);
    EXPECT_TRUE(g.report.passed()) << name;
    const auto& c = g.conditions;
    EXPECT_TRUE(c.bounded && c.b_is_theta_minus_1 && c.reduced_degree && c.constant_boundary &&
                c.one_cell_per_corner && c.delta_is_clique)
        << name;
  }
}

TEST(BoundedGeometry, AllFalseForDiamond) {
  auto g = check_bounded_geometry(builtin("diamond_open"), 4);
  EXPECT_TRUE(g.report.passed());
  const auto& c = g.conditions;
  EXPECT_FALSE(c.bounded || c.b_is_theta_minus_1 || c.reduced_degree || c.constant_boundary ||
               c.one_cell_per_corner || c.delta_is_clique);
}

TEST(BoundedGeometry, LopsidedOutsideHypothesis) {
  auto g = check_bounded_geometry(builtin("lopsided3"), 5);
  EXPECT_FALSE(g.hypothesis_met);
  EXPECT_EQ(g.report.verdict, Verdict::Inapplicable);
  EXPECT_TRUE(g.conditions.bounded);
  EXPECT_FALSE(g.conditions.delta_is_clique);
  EXPECT_EQ(measured(g.report, 5, "delta"), 3);
  EXPECT_EQ(measured(g.report, 5, "theta(theta-1)"), 2);
  EXPECT_EQ(measured(g.report, 4, "max interior degree"), measured(g.report, 5, "max interior degree"));
}

TEST(Classify, Trichotomy) {
  for (auto name : {"sierpinski", "line", "tree4"})
    EXPECT_EQ(classify_geometry(builtin(name), 4).kind, GeometryClass::Bounded) << name;

  auto open = classify_geometry(builtin("diamond_open"), 4);
  EXPECT_EQ(open.kind, GeometryClass::LocallyFiniteUnbounded);
  ASSERT_TRUE(open.origin);
  EXPECT_FALSE(open.origin->has_origin_vertex());
  EXPECT_TRUE(open.report.passed());

  auto fixed = classify_geometry(builtin("diamond_fixed"), 4);
  EXPECT_EQ(fixed.kind, GeometryClass::NonLocallyFinite);
  EXPECT_TRUE(fixed.report.passed());
  std::int64_t last = 0;
  for (int n = 2; n <= 6; ++n) {
    auto d = measured(fixed.report, n, "origin vertex degree");
    EXPECT_GT(d, last);
    last = d;
  }

  EXPECT_EQ(classify_geometry(builtin("lopsided3"), 4).kind, GeometryClass::Inapplicable);
}

TEST(Classify, MarchingVerticesOfOpenDiamond) {
  // every level-j vertex off the top boundary of G_n (j < n) sits on three
  // j-cells and has degree 3*2^j
  auto hg = generate(builtin("diamond_open"), 6);
  for (VertexId v = 0; v < hg.vertex_count(); ++v) {
    if (hg.on_boundary(v) || hg.level(v) == 0) continue;
    EXPECT_EQ(hg.graph().degree(v), 3u << hg.level(v)) << v;
  }
}

TEST(CellVolume, Examples) {
  auto s = check_cell_volume(builtin("sierpinski"), 2);
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(measured(s, 2, "Vol closed cell"), 54);
  EXPECT_EQ(measured(s, 2, "Vol interior = Vol closed - |dC_n|"), 48);

  auto l = check_cell_volume(builtin("line"), 3);
  EXPECT_EQ(measured(l, 3, "Vol closed cell"), 16);
  EXPECT_EQ(measured(l, 3, "Vol interior = Vol closed - |dC_n|"), 14);

  auto d = check_cell_volume(builtin("diamond_open"), 3);
  EXPECT_TRUE(d.passed());
  EXPECT_EQ(measured(d, 3, "Vol closed cell"), 250);
  EXPECT_EQ(measured(d, 3, "Vol interior = Vol closed - |dC_n|"), 234);
  EXPECT_EQ(measured(d, 3, "Vol interior = Vol closed - delta_X holds"), 0);
}

TEST(CellVolume, AllBuiltins) {
  for (const auto& name : builtin_names()) EXPECT_TRUE(check_cell_volume(builtin(name), 6).passed()) << name;
}

TEST(Diameters, GasketAndLine) {
  for (auto name : {"sierpinski", "line"}) {
    auto r = check_diameters(builtin(name), 6);
    EXPECT_TRUE(r.passed()) << name;
    for (int n = 1; n <= 6; ++n) {
      EXPECT_EQ(measured(r, n, "(i) max boundary pair distance"), std::int64_t{1} << n);
      EXPECT_EQ(measured(r, n, "(iii) diam upper"), std::int64_t{1} << n);
    }
  }
}

TEST(Diameters, Tree4BoundsAreSharp) {
  auto r = check_diameters(builtin("tree4"), 4);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(measured(r, 2, "(ii) max d(x, boundary vertex) upper"), 7);
  EXPECT_EQ(measured(r, 2, "(iii) diam upper"), 8);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(measured(r, n, "(ii) upper bound attained"), 1);
    EXPECT_EQ(measured(r, n, "(iii) upper bound attained"), 1);
  }
}

TEST(Diameters, MatchOracle) {
  auto hg = generate(builtin("tree4"), 3);
  auto adj = oracle::adjacency(hg.graph());
  int diam = 0, far = 0;
  for (VertexId v = 0; v < hg.vertex_count(); ++v) {
    auto d = oracle::bfs(adj, v);
    diam = std::max(diam, *std::max_element(d.begin(), d.end()));
    if (hg.on_boundary(v)) far = std::max(far, *std::max_element(d.begin(), d.end()));
  }
  auto r = check_diameters(builtin("tree4"), 3);
  EXPECT_EQ(measured(r, 3, "(iii) diam upper"), diam);
  EXPECT_EQ(measured(r, 3, "(ii) max d(x, boundary vertex) upper"), far);
}

TEST(CellsLemma, EveryBuiltinAtDepthFour) {
  for (const auto& name : builtin_names()) {
    auto m = builtin(name);
    auto r = check_cells_lemma(m, 4);
    EXPECT_EQ(measured(r, 4, "vertices with cells*(theta-1) != reduced degree"), 0) << name;

    auto hg = generate(m, 4);
    auto ref = census_oracle(hg);
    for (VertexId v = 0; v < hg.vertex_count(); ++v) {
      if (hg.level(v) < 1 || hg.on_boundary(v)) continue;
      EXPECT_EQ(ref.cells[v] * (m.theta() - 1), ref.reduced[v].size()) << name << ' ' << v;
    }
  }
}

TEST(CellsLemma, CorollaryOnStabilizedCensus) {
  for (auto name : {"sierpinski", "line", "tree4", "lopsided3"}) {
    auto r = check_cells_lemma(builtin(name), 4);
    const auto* row_cm = row(r, 4, "c*(theta-1) = M");
    if (row_cm) EXPECT_TRUE(row_cm->holds) << name;
  }
  auto g = check_cells_lemma(builtin("sierpinski"), 4);
  EXPECT_TRUE(g.passed());
  EXPECT_NE(row(g, 4, "c*(theta-1) = M"), nullptr);
}
