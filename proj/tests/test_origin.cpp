#include <gtest/gtest.h>

#include "selfsim/cell_model.hpp"
#include "selfsim/substitution.hpp"

using namespace selfsim;

namespace {

// Vertices i of G_{n-1} with psi(i) == embedding(i), recomputed from the
// reduction witness.
std::vector<VertexId> fixed_points(const CellModel& m, int n) {
  auto r = verify_reduction_isomorphism(m, n);
  auto hi = generate(m, n);
  std::vector<VertexId> out;
  for (VertexId i = 0; i < r.psi.size(); ++i)
    if (r.psi[i] == hi.embedding()[i]) out.push_back(i);
  return out;
}

}  // namespace

TEST(Origin, FixedDiamondKeepsCorner) {
  auto info = detect_origin(builtin("diamond_fixed"), 3);
  ASSERT_TRUE(info.resolved());
  EXPECT_EQ(*info.stabilizing_power, 1);
  ASSERT_TRUE(info.has_origin_vertex());
  EXPECT_EQ(std::get<OriginVertex>(info.kind).vertex, 0u);
  EXPECT_EQ(fixed_points(builtin("diamond_fixed"), 4), (std::vector<VertexId>{0}));
}

TEST(Origin, OpenDiamondHasOnlyACell) {
  auto m = builtin("diamond_open");
  auto info = detect_origin(m, 3);
  ASSERT_TRUE(info.resolved());
  EXPECT_FALSE(info.has_origin_vertex());
  ASSERT_TRUE(std::holds_alternative<OriginCell>(info.kind));
  EXPECT_TRUE(fixed_points(m, 3).empty());
  EXPECT_TRUE(fixed_points(m, 4).empty());

  const auto& cell = std::get<OriginCell>(info.kind);
  EXPECT_EQ(cell.boundary.size(), 2u);
  auto g = generate(m, info.depth);
  auto c = g.cell(cell.level, cell.index);
  EXPECT_EQ(c.boundary, cell.boundary);
  EXPECT_EQ(c.slot_path, cell.slot_path);
}

TEST(Origin, GasketFixesCornerA) {
  auto info = detect_origin(builtin("sierpinski"), 3);
  ASSERT_TRUE(info.has_origin_vertex());
  EXPECT_EQ(std::get<OriginVertex>(info.kind).vertex, 0u);
  EXPECT_EQ(*info.stabilizing_power, 1);
  EXPECT_EQ(fixed_points(builtin("sierpinski"), 3), (std::vector<VertexId>{0}));
}

TEST(Origin, OtherBuiltinsResolve) {
  for (auto name : {"line", "tree4", "lopsided3"}) {
    auto info = detect_origin(builtin(name), 3);
    EXPECT_TRUE(info.resolved()) << name;
    EXPECT_FALSE(info.evidence.empty());
  }
}

TEST(Origin, CapLeavesItUnresolved) {
  auto info = detect_origin(builtin("sierpinski"), 3, 6, {.edge_cap = 10});
  EXPECT_FALSE(info.resolved());
  EXPECT_FALSE(info.evidence.empty());
}
