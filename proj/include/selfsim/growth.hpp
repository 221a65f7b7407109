#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "selfsim/cell_model.hpp"
#include "selfsim/report.hpp"
#include "selfsim/substitution.hpp"

namespace selfsim {

/// d(x, outer boundary) − 1 for every vertex, clamped at 0. Balls of at most
/// this radius never leave the closed top cell, so their volumes are the
/// infinite-graph values.
std::vector<std::uint32_t> safe_radii(const HierarchicalGraph& hg);
std::uint32_t safe_radius(const HierarchicalGraph& hg, VertexId x);

struct GrowthCurve {
  VertexId center = 0;
  std::uint32_t safe_radius = 0;
  std::vector<std::uint64_t> volumes;  // V_x(r) for r = 0..safe_radius
};

/// Throws InputError when the safe radius of x is 0.
GrowthCurve growth_function(const HierarchicalGraph& hg, VertexId x);

/// min/max of V_x(r) over centers off the top boundary with safe radius ≥ r. These bracket the
/// infinite-graph values one-sidedly: true V̲(r) ≤ lower, upper ≤ true V̄(r).
struct GlobalGrowth {
  std::uint32_t r = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::size_t admissible = 0;
  VertexId lower_center = 0;  // smallest id attaining the value
  VertexId upper_center = 0;
};

/// Throws InputError when no center is admissible at r.
GlobalGrowth global_growth(const HierarchicalGraph& hg, std::uint32_t r);

/// One sweep for several radii; radii without an admissible center are
/// dropped from the result.
std::vector<GlobalGrowth> global_growth_series(const HierarchicalGraph& hg,
                                               std::span<const std::uint32_t> radii);

struct DoublingRatio {
  double ratio = 0.0;
  VertexId center = 0;
  std::uint32_t r = 0;
  std::uint64_t v_r = 0;
  std::uint64_t v_2r = 0;
};

/// max V_x(2r)/V_x(r) over x and r ≥ 1 with 2r ≤ safe radius of x.
DoublingRatio doubling_ratio(const HierarchicalGraph& hg);

struct DimensionEstimate {
  std::vector<GlobalGrowth> points;  // the ν-ladder radii that had admissible centers
  double slope_lower = 0.0;
  double slope_upper = 0.0;
  double residual_lower = 0.0;  // RMS residual of the log-log fit
  double residual_upper = 0.0;
  // Slopes over consecutive windows of 3 ladder points; their min and max
  // stand in for liminf and limsup.
  std::vector<double> window_lower;
  std::vector<double> window_upper;
  double dim_predicted = 0.0;
  double deviation = 0.0;  // max |slope − dim_predicted| over the two fits
  std::uint32_t r_min = 0;
  std::uint32_t r_max = 0;
};

/// Least-squares slopes of log V̲ and log V̄ against log r on r = ν, ν², …
/// Throws InputError with fewer than 3 usable ladder points.
DimensionEstimate estimate_dimensions(const HierarchicalGraph& hg, std::size_t mu,
                                      std::uint32_t nu);

/// Slope and RMS residual of the least-squares line through (x, y).
std::pair<double, double> fit_line(std::span<const double> x, std::span<const double> y);

/// rₙ = νⁿ + ρ(ν^(n−1)(ν+1) − 2)/(ν − 1).
std::uint64_t sandwich_radius(std::uint32_t nu, std::uint32_t rho, int n);

/// Growth-sandwich bounds at rₙ on G_depth for n in [n_min, n_max], plus
/// V_x(rₙ) ≥ μⁿθ(θ−1) for every admissible x. Inapplicable unless c and M
/// are stabilized.
TheoremReport check_growth_sandwich(const CellModel& m, int depth, int n_min, int n_max,
                                    GenerateOptions opts = {});

}  // namespace selfsim
