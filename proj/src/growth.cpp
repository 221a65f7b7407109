#include "selfsim/growth.hpp"

#include <algorithm>
#include <cmath>

#include "selfsim/invariants.hpp"

namespace selfsim {

namespace {

// Truncated BFS with a stamp array so repeated scans cost only the ball size.
class BallScanner {
 public:
  explicit BallScanner(const FiniteGraph& g) : g_(g), stamp_(g.vertex_count(), 0) {}

  // vols[r] = Vol B(x, r) for r = 0..radius.
  void scan(VertexId x, std::uint32_t radius, std::vector<std::uint64_t>& vols) {
    ++epoch_;
    queue_.clear();
    queue_.push_back(x);
    stamp_[x] = epoch_;
    vols.assign(radius + 1, 0);
    std::uint64_t acc = 0;
    std::size_t begin = 0, end = 1;
    for (std::uint32_t layer = 0;; ++layer) {
      for (std::size_t i = begin; i < end; ++i) acc += g_.degree(queue_[i]);
      vols[layer] = acc;
      if (layer == radius) return;
      for (std::size_t i = begin; i < end; ++i) {
        for (VertexId w : g_.neighbors(queue_[i])) {
          if (stamp_[w] != epoch_) {
            stamp_[w] = epoch_;
            queue_.push_back(w);
          }
        }
      }
      begin = end;
      end = queue_.size();
      if (begin == end) {
        std::fill(vols.begin() + layer + 1, vols.end(), acc);
        return;
      }
    }
  }

 private:
  const FiniteGraph& g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> queue_;
};

}  // namespace

std::vector<std::uint32_t> safe_radii(const HierarchicalGraph& hg) {
  const DistanceMap d = bfs_distances(hg.graph(), hg.boundary());
  std::vector<std::uint32_t> out(hg.vertex_count(), 0);
  for (VertexId v = 0; v < out.size(); ++v) {
    const std::uint32_t dv = d.at(v);
    out[v] = dv == 0 ? 0 : dv - 1;
  }
  return out;
}

std::uint32_t safe_radius(const HierarchicalGraph& hg, VertexId x) {
  if (x >= hg.vertex_count()) throw InputError("vertex " + std::to_string(x) + " out of range");
  return safe_radii(hg)[x];
}

GrowthCurve growth_function(const HierarchicalGraph& hg, VertexId x) {
  GrowthCurve curve;
  curve.center = x;
  curve.safe_radius = safe_radius(hg, x);
  if (curve.safe_radius == 0) {
    throw InputError("vertex " + std::to_string(x) + " has safe radius 0");
  }
  BallScanner scanner(hg.graph());
  scanner.scan(x, curve.safe_radius, curve.volumes);
  return curve;
}

std::vector<GlobalGrowth> global_growth_series(const HierarchicalGraph& hg,
                                               std::span<const std::uint32_t> radii) {
  std::vector<std::uint32_t> rs(radii.begin(), radii.end());
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  std::vector<GlobalGrowth> acc(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) acc[i].r = rs[i];

  const auto safe = safe_radii(hg);
  BallScanner scanner(hg.graph());
  std::vector<std::uint64_t> vols;
  for (VertexId x = 0; x < hg.vertex_count(); ++x) {
    if (hg.on_boundary(x)) continue;
    const std::size_t usable =
        static_cast<std::size_t>(std::upper_bound(rs.begin(), rs.end(), safe[x]) - rs.begin());
    if (usable == 0) continue;
    scanner.scan(x, rs[usable - 1], vols);
    for (std::size_t i = 0; i < usable; ++i) {
      const std::uint64_t v = vols[rs[i]];
      GlobalGrowth& g = acc[i];
      if (g.admissible == 0 || v < g.lower) {
        g.lower = v;
        g.lower_center = x;
      }
      if (g.admissible == 0 || v > g.upper) {
        g.upper = v;
        g.upper_center = x;
      }
      ++g.admissible;
    }
  }
  std::erase_if(acc, [](const GlobalGrowth& g) { return g.admissible == 0; });
  return acc;
}

GlobalGrowth global_growth(const HierarchicalGraph& hg, std::uint32_t r) {
  const auto series = global_growth_series(hg, std::span<const std::uint32_t>(&r, 1));
  if (series.empty()) {
    throw InputError("no center with safe radius >= " + std::to_string(r) + " at depth " +
                     std::to_string(hg.depth()));
  }
  return series.front();
}

DoublingRatio doubling_ratio(const HierarchicalGraph& hg) {
  const auto safe = safe_radii(hg);
  BallScanner scanner(hg.graph());
  std::vector<std::uint64_t> vols;
  DoublingRatio best;
  bool found = false;
  for (VertexId x = 0; x < hg.vertex_count(); ++x) {
    if (safe[x] < 2) continue;
    scanner.scan(x, safe[x], vols);
    for (std::uint32_t r = 1; 2 * r <= safe[x]; ++r) {
      const double ratio = static_cast<double>(vols[2 * r]) / static_cast<double>(vols[r]);
      if (!found || ratio > best.ratio) {
        best = {ratio, x, r, vols[r], vols[2 * r]};
        found = true;
      }
    }
  }
  if (!found) throw InputError("no vertex with safe radius >= 2");
  return best;
}

std::pair<double, double> fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (my + slope * (x[i] - mx));
    ss += e * e;
  }
  return {slope, std::sqrt(ss / static_cast<double>(n))};
}

DimensionEstimate estimate_dimensions(const HierarchicalGraph& hg, std::size_t mu,
                                      std::uint32_t nu) {
  if (nu < 2) throw InputError("estimate_dimensions: nu must be at least 2");
  const auto safe = safe_radii(hg);
  const std::uint32_t reach = *std::max_element(safe.begin(), safe.end());
  std::vector<std::uint32_t> ladder;
  for (std::uint64_t r = nu; r <= reach; r *= nu) ladder.push_back(static_cast<std::uint32_t>(r));

  DimensionEstimate est;
  est.points = global_growth_series(hg, ladder);
  est.dim_predicted = std::log(static_cast<double>(mu)) / std::log(static_cast<double>(nu));
  if (est.points.size() < 3) {
    throw InputError("estimate_dimensions: only " + std::to_string(est.points.size()) +
                     " ladder radii admissible at depth " + std::to_string(hg.depth()) +
                     "; need 3");
  }
  est.r_min = est.points.front().r;
  est.r_max = est.points.back().r;
  std::vector<double> lr, llo, lup;
  for (const auto& p : est.points) {
    lr.push_back(std::log(static_cast<double>(p.r)));
    llo.push_back(std::log(static_cast<double>(p.lower)));
    lup.push_back(std::log(static_cast<double>(p.upper)));
  }
  std::tie(est.slope_lower, est.residual_lower) = fit_line(lr, llo);
  std::tie(est.slope_upper, est.residual_upper) = fit_line(lr, lup);
  constexpr std::size_t kWindow = 3;
  for (std::size_t i = 0; i + kWindow <= lr.size(); ++i) {
    std::span<const double> x(lr.data() + i, kWindow);
    est.window_lower.push_back(fit_line(x, {llo.data() + i, kWindow}).first);
    est.window_upper.push_back(fit_line(x, {lup.data() + i, kWindow}).first);
  }
  est.deviation = std::max(std::abs(est.slope_lower - est.dim_predicted),
                           std::abs(est.slope_upper - est.dim_predicted));
  return est;
}

std::uint64_t sandwich_radius(std::uint32_t nu, std::uint32_t rho, int n) {
  if (n < 1) throw InputError("sandwich_radius: n must be positive");
  std::uint64_t nun1 = 1;
  for (int i = 1; i < n; ++i) nun1 *= nu;
  return nun1 * nu + std::uint64_t{rho} * (nun1 * (nu + 1) - 2) / (nu - 1);
}

TheoremReport check_growth_sandwich(const CellModel& m, int depth, int n_min, int n_max,
                                    GenerateOptions opts) {
  if (n_min < 1 || n_max < n_min) throw InputError("check_growth_sandwich: bad n range");
  TheoremReport r;
  r.theorem = "sandwich";
  r.model = m.name;
  r.depth_min = n_min;
  r.depth_max = n_max;
  const Parameters p = deep_parameters(m, std::max(depth, 3), opts);
  if (!p.c_stabilized || !p.max_degree_stabilized) {
    r.inapplicable("c or M not stabilized at depth " + std::to_string(p.depth) +
                   ": geometry not bounded");
    return r;
  }
  const std::int64_t mu = static_cast<std::int64_t>(p.mu);
  const std::int64_t tt = static_cast<std::int64_t>(p.theta * (p.theta - 1));
  const std::int64_t c = static_cast<std::int64_t>(*p.c);
  const std::int64_t M = static_cast<std::int64_t>(*p.max_degree);
  const std::int64_t theta = static_cast<std::int64_t>(p.theta);
  const std::int64_t cells_factor = (c - 1) * theta + 1;
  const std::int64_t tail = tt * (c - 1) * (M - 1);
  r.info(depth, "c", c);
  r.info(depth, "M", M);
  r.info(depth, "kappa", std::int64_t{p.kappa});

  auto mu_pow = [&](int e) {
    std::int64_t acc = 1;
    for (int i = 0; i < e; ++i) acc *= mu;
    return acc;
  };

  const HierarchicalGraph hg = generate(m, depth, opts);
  std::vector<std::uint32_t> radii;
  for (int n = n_min; n <= n_max; ++n) {
    radii.push_back(static_cast<std::uint32_t>(sandwich_radius(p.nu, p.rho, n)));
  }
  const auto series = global_growth_series(hg, radii);
  const double dim = std::log(static_cast<double>(p.mu)) / std::log(static_cast<double>(p.nu));
  for (int n = n_min; n <= n_max; ++n) {
    const std::uint32_t rn = radii[static_cast<std::size_t>(n - n_min)];
    auto it = std::find_if(series.begin(), series.end(),
                           [&](const GlobalGrowth& g) { return g.r == rn; });
    if (it == series.end()) {
      r.notes.push_back("n=" + std::to_string(n) + ": no admissible center at r_n=" +
                        std::to_string(rn) + " on G_" + std::to_string(depth) + "; skipped");
      continue;
    }
    r.info(n, "r_n", std::int64_t{rn});
    r.info(n, "admissible centers", static_cast<std::int64_t>(it->admissible));
    const std::int64_t lo = static_cast<std::int64_t>(it->lower);
    const std::int64_t hi = static_cast<std::int64_t>(it->upper);
    if (p.rho == 0) {
      // rₙ = νⁿ, so rₙ^(log μ/log ν) = μⁿ exactly.
      r.bound(n, "r_n^d theta(theta-1) mu^-kappa <= min V(r_n)",
              mu_pow(n - p.kappa) * tt, lo, Relation::GreaterEq);
      r.bound(n, "max V(r_n) <= upper bound",
              mu_pow(n + p.kappa) * tt * cells_factor + tail, hi, Relation::LessEq);
    } else {
      const double rd = std::pow(static_cast<double>(rn), dim);
      const double k = std::pow(static_cast<double>(mu), p.kappa);
      r.bound(n, "r_n^d theta(theta-1) mu^-kappa <= min V(r_n)",
              rd * static_cast<double>(tt) / k, lo, Relation::GreaterEq);
      r.bound(n, "max V(r_n) <= upper bound",
              rd * k * static_cast<double>(tt * cells_factor) + static_cast<double>(tail), hi,
              Relation::LessEq);
    }
    r.bound(n, "min V_x(r_n) >= mu^n theta(theta-1)", mu_pow(n) * tt, lo, Relation::GreaterEq);
  }
  return r;
}

}  // namespace selfsim
