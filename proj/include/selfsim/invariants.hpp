#pragma once

#include <optional>
#include <string_view>

#include "selfsim/cell_model.hpp"
#include "selfsim/report.hpp"
#include "selfsim/substitution.hpp"

namespace selfsim {

/// Degree census of Gₙ over its interior (everything except the θ top
/// boundary vertices, whose X-degree Gₙ does not determine).
struct DegreeCensus {
  int depth = 0;
  std::optional<std::size_t> b;  // common degree of 1-cell boundary vertices inside the closed cell
  std::size_t c = 0;             // max number of 1-cells with an interior F-vertex on their boundary
  std::size_t max_degree = 0;    // M
  std::vector<std::uint32_t> cells;  // per vertex: 1-cells having it on their boundary
};

DegreeCensus degree_census(const HierarchicalGraph& hg);

/// model_parameters refined on G_{depth−1} and G_depth: b, c, M with
/// stabilized flags, and ν, λ re-measured around the deepest 1-cell.
Parameters deep_parameters(const CellModel& m, int depth, GenerateOptions opts = {});

/// |δCₙ| of the top cell: edges leaving the outer boundary.
std::uint64_t top_edge_boundary(const HierarchicalGraph& hg);

TheoremReport check_edge_boundary(const CellModel& m, int n_max, GenerateOptions opts = {});

/// Per-condition booleans of the six-way equivalence.
struct GeometryConditions {
  bool bounded = false;           // (i) max interior degree equal at the two deepest depths
  bool b_is_theta_minus_1 = false;  // (ii)
  bool reduced_degree = false;    // (iii) locally finite and deg = deg in the reduced graph on F
  bool constant_boundary = false;   // (iv)
  bool one_cell_per_corner = false;  // (v)
  bool delta_is_clique = false;   // (vi)
};

struct BoundedGeometryResult {
  TheoremReport report;
  GeometryConditions conditions;
  bool hypothesis_met = false;  // constant inner degree exists
};

BoundedGeometryResult check_bounded_geometry(const CellModel& m, int n_max,
                                             GenerateOptions opts = {});

enum class GeometryClass { Bounded, LocallyFiniteUnbounded, NonLocallyFinite, Inapplicable };
std::string_view to_string(GeometryClass g);

struct Classification {
  GeometryClass kind = GeometryClass::Inapplicable;
  TheoremReport report;
  std::optional<OriginInfo> origin;
};

/// Degree trichotomy. For a non-locally-finite model the origin vertex's
/// degree in Gₙ must strictly increase over n = 2..max(depth, 6).
Classification classify_geometry(const CellModel& m, int depth, GenerateOptions opts = {});

TheoremReport check_cell_volume(const CellModel& m, int n_max, GenerateOptions opts = {});

TheoremReport check_diameters(const CellModel& m, int n_max, GenerateOptions opts = {});

TheoremReport check_cells_lemma(const CellModel& m, int n, GenerateOptions opts = {});

}  // namespace selfsim
