#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "selfsim/cell_model.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/report.hpp"

namespace selfsim {

/// Half-open id interval.
struct IdRange {
  VertexId begin = 0;
  VertexId end = 0;
  bool contains(VertexId v) const { return v >= begin && v < end; }
  std::size_t size() const { return end - begin; }
};

/// A k-cell of Gₙ. Its interior is `span` minus `boundary`; only the top
/// cell's span contains its own boundary.
struct Cell {
  int level = 0;
  std::size_t index = 0;  // position among the cells of this level
  IdRange span;
  std::vector<VertexId> boundary;
  std::optional<std::size_t> parent;  // index at level + 1
  std::vector<std::size_t> slot_path;

  bool in_interior(VertexId v) const;
  bool in_closure(VertexId v) const;
  std::vector<VertexId> interior() const;
};

/// Gₙ: the n-cell graph produced by n−1 rounds of substitution, with F-levels,
/// the cell tree and the anchor embedding Gₙ₋₁ ↪ Gₙ.
///
/// Vertex ids are canonical: the model's own vertices keep their ids, then
/// each slot copy contributes its non-boundary vertices as one contiguous
/// block, slots in order. Equivalently, each vertex is named by its shallowest
/// (slot path, model vertex) address and ids follow the pre-order of those
/// addresses.
class HierarchicalGraph {
 public:
  struct CellRecord {
    IdRange span;
    std::uint32_t parent = 0;  // index at level + 1 (unused for the top cell)
    std::uint32_t slot = 0;    // slot index inside the parent
  };

  const FiniteGraph& graph() const { return graph_; }
  int depth() const { return depth_; }
  std::size_t theta() const { return theta_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }

  /// Largest k with v ∈ Fᵏ; the outer boundary carries level n.
  int level(VertexId v) const { return levels_[v]; }
  std::span<const int> levels() const { return levels_; }

  /// The θ outer boundary vertices, in model boundary order.
  std::span<const VertexId> boundary() const { return boundary_; }
  bool on_boundary(VertexId v) const;

  /// Gₙ₋₁ id -> Gₙ id (the anchor-slot copy). Empty for n = 1.
  std::span<const VertexId> embedding() const { return embedding_; }

  std::size_t cell_count(int k) const { return cells_.at(k - 1).size(); }
  const CellRecord& cell_record(int k, std::size_t i) const { return cells_.at(k - 1)[i]; }
  std::span<const VertexId> cell_boundary(int k, std::size_t i) const {
    return {cell_boundaries_.at(k - 1).data() + i * theta_, theta_};
  }
  Cell cell(int k, std::size_t i) const;

  /// Identity of the generating model up to slot orientation.
  const std::string& fingerprint() const { return fingerprint_; }

 private:
  friend HierarchicalGraph first_generation(const CellModel&);
  friend HierarchicalGraph substitute(const CellModel&, const HierarchicalGraph&);

  FiniteGraph graph_;
  std::vector<int> levels_;
  int depth_ = 0;
  std::size_t theta_ = 0;
  std::vector<VertexId> boundary_;
  std::vector<VertexId> embedding_;
  std::vector<std::vector<CellRecord>> cells_;           // [k-1][i]
  std::vector<std::vector<VertexId>> cell_boundaries_;  // [k-1][i*θ + j]
  std::string fingerprint_;
};

struct GenerateOptions {
  std::uint64_t edge_cap = std::uint64_t{1} << 22;
};

/// G₁: the model graph itself.
HierarchicalGraph first_generation(const CellModel& m);

/// Gₙ₊₁ from Gₙ: every slot clique of the model is replaced by a copy of
/// `inner` whose boundary[j] is glued to slot position j.
HierarchicalGraph substitute(const CellModel& m, const HierarchicalGraph& inner);

/// μⁿ·θ(θ−1)/2, throwing CapExceeded above the cap or on overflow.
std::uint64_t checked_edge_count(const CellModel& m, int n, std::uint64_t edge_cap);

HierarchicalGraph generate(const CellModel& m, int n, GenerateOptions opts = {});

/// G₁..Gₙ; element i is Gᵢ₊₁.
std::vector<HierarchicalGraph> generate_ladder(const CellModel& m, int n,
                                               GenerateOptions opts = {});

/// The k-cells of hg (1 ≤ k ≤ n), ordered by slot path.
std::vector<Cell> cells_at_level(const HierarchicalGraph& hg, int k);

/// Vertices of level ≥ k, ascending.
std::vector<VertexId> level_at_least(const HierarchicalGraph& hg, int k);

/// Order-preserving map from G_{n−k} ids onto the level-≥k vertices of Gₙ,
/// returned only if it is a level-shifting isomorphism between G_{n−k} and
/// reduce(Gₙ, level ≥ k), checked edge by edge.
std::optional<std::vector<VertexId>> canonical_reduction_map(const HierarchicalGraph& upper,
                                                             int k,
                                                             const HierarchicalGraph& lower);

struct ReductionCheck {
  TheoremReport report;
  std::vector<VertexId> psi;  // G_{n−1} id -> Gₙ id (k = 1 witness)
};

/// For each 1 ≤ k < n: reduce(Gₙ, level ≥ k) with levels shifted down by k is
/// isomorphic to G_{n−k}, levels and boundary preserved. `ladder[i]` is Gᵢ₊₁
/// and ladder.back() is the graph under test.
ReductionCheck verify_reduction_isomorphism(std::span<const HierarchicalGraph> ladder,
                                            const std::string& model_name);
ReductionCheck verify_reduction_isomorphism(const CellModel& m, int n,
                                            GenerateOptions opts = {});

struct OriginVertex {
  VertexId vertex = 0;  // id in the deeper of the two checked graphs
};
struct OriginCell {
  int level = 0;
  std::size_t index = 0;
  std::vector<std::size_t> slot_path;
  std::vector<VertexId> boundary;
};

struct OriginInfo {
  std::optional<int> stabilizing_power;
  std::variant<std::monostate, OriginVertex, OriginCell> kind;
  int depth = 0;  // depth of the deeper graph the ids refer to
  std::vector<std::string> evidence;

  bool resolved() const { return stabilizing_power.has_value(); }
  bool has_origin_vertex() const { return std::holds_alternative<OriginVertex>(kind); }
};

/// Fixed-point dichotomy for ψᵏ, k = 1..k_max, checked at two consecutive
/// depths through the anchor embedding.
OriginInfo detect_origin(const CellModel& m, int depth, int k_max = 6,
                         GenerateOptions opts = {});

}  // namespace selfsim
