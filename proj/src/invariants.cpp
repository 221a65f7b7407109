#include "selfsim/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace selfsim {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  __int128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > std::numeric_limits<std::int64_t>::max()) throw CapExceeded("integer overflow in power");
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<char> top_boundary_mask(const HierarchicalGraph& hg) {
  std::vector<char> mask(hg.vertex_count(), 0);
  for (VertexId v : hg.boundary()) mask[v] = 1;
  return mask;
}

// anc[i] moves from the level-k ancestor of 1-cell i to the level-(k+1) one.
void lift(const HierarchicalGraph& hg, int k, std::vector<std::uint32_t>& anc) {
  for (auto& a : anc) a = hg.cell_record(k, a).parent;
}

}  // namespace

DegreeCensus degree_census(const HierarchicalGraph& hg) {
  DegreeCensus out;
  out.depth = hg.depth();
  const auto& g = hg.graph();
  const auto top = top_boundary_mask(hg);
  out.cells.assign(hg.vertex_count(), 0);

  std::set<std::size_t> inner_degrees;
  for (std::size_t i = 0; i < hg.cell_count(1); ++i) {
    const auto span = hg.cell_record(1, i).span;
    const auto bnd = hg.cell_boundary(1, i);
    for (VertexId u : bnd) {
      ++out.cells[u];
      std::size_t d = 0;
      for (VertexId w : g.neighbors(u)) {
        if (span.contains(w) && std::find(bnd.begin(), bnd.end(), w) == bnd.end()) ++d;
      }
      inner_degrees.insert(d);
    }
  }
  if (inner_degrees.size() == 1) out.b = *inner_degrees.begin();

  for (VertexId v = 0; v < hg.vertex_count(); ++v) {
    if (top[v]) continue;
    out.max_degree = std::max(out.max_degree, g.degree(v));
    if (hg.level(v) >= 1) out.c = std::max<std::size_t>(out.c, out.cells[v]);
  }
  return out;
}

Parameters deep_parameters(const CellModel& m, int depth, GenerateOptions opts) {
  if (depth < 3) throw InputError("deep_parameters: depth must be at least 3");
  Parameters p = model_parameters(m);
  const auto ladder = generate_ladder(m, depth, opts);
  const HierarchicalGraph& hg = ladder.back();
  const DegreeCensus shallow = degree_census(ladder[ladder.size() - 2]);
  const DegreeCensus deep = degree_census(hg);

  p.depth = depth;
  p.b = deep.b;
  p.c = deep.c;
  p.c_stabilized = shallow.c == deep.c;
  p.max_degree = deep.max_degree;
  p.max_degree_stabilized = shallow.max_degree == deep.max_degree;

  // ν and λ around the 1-cell farthest from the outer boundary.
  const DistanceMap outer = bfs_distances(hg.graph(), hg.boundary());
  std::size_t best = 0;
  std::uint32_t best_margin = 0;
  for (std::size_t i = 0; i < hg.cell_count(1); ++i) {
    const Cell c = hg.cell(1, i);
    std::uint32_t margin = std::numeric_limits<std::uint32_t>::max();
    for (VertexId v = c.span.begin; v < c.span.end; ++v) margin = std::min(margin, outer.at(v));
    for (VertexId v : c.boundary) margin = std::min(margin, outer.at(v));
    if (margin > best_margin) {
      best_margin = margin;
      best = i;
    }
  }
  const Cell cell = hg.cell(1, best);
  std::vector<VertexId> closure = cell.interior();
  closure.insert(closure.end(), cell.boundary.begin(), cell.boundary.end());
  std::uint32_t nu = std::numeric_limits<std::uint32_t>::max(), lambda = 0;
  for (VertexId x : closure) {
    const DistanceMap d = bfs_distances(hg.graph(), std::span<const VertexId>(&x, 1));
    for (VertexId y : closure) lambda = std::max(lambda, d.at(y));
    if (std::find(cell.boundary.begin(), cell.boundary.end(), x) == cell.boundary.end()) continue;
    for (VertexId y : cell.boundary) {
      if (y != x) nu = std::min(nu, d.at(y));
    }
  }
  p.nu_deep = nu;
  p.lambda_deep = lambda;
  return p;
}

std::uint64_t top_edge_boundary(const HierarchicalGraph& hg) {
  std::uint64_t total = 0;
  for (VertexId v : hg.boundary()) total += hg.graph().degree(v);
  return total;
}

TheoremReport check_edge_boundary(const CellModel& m, int n_max, GenerateOptions opts) {
  const Parameters p = model_parameters(m);
  TheoremReport r;
  r.theorem = "edge_boundary";
  r.model = m.name;
  r.depth_min = 1;
  r.depth_max = n_max;
  const auto ladder = generate_ladder(m, n_max, opts);
  if (!p.b) {
    for (const auto& hg : ladder) r.info(hg.depth(), "|dC_n|", as_int(top_edge_boundary(hg)));
    r.inapplicable("no constant inner degree: boundary vertices of a cell have unequal inner degrees");
    return r;
  }
  const std::int64_t b = static_cast<std::int64_t>(*p.b);
  const std::int64_t t1 = static_cast<std::int64_t>(p.theta) - 1;
  for (const auto& hg : ladder) {
    const int n = hg.depth();
    const std::int64_t measured = as_int(top_edge_boundary(hg));
    const std::int64_t num = ipow(b, n - 1) * static_cast<std::int64_t>(p.delta);
    const std::int64_t den = ipow(t1, n - 1);
    if (num % den == 0) {
      r.exact(n, "|dC_n|", num / den, measured);
    } else {
      r.exact(n, "|dC_n|*(theta-1)^(n-1)", num, measured * den);
    }
  }
  return r;
}

namespace {

// (v): every boundary vertex of every k-cell (k >= 2) lies on the boundary
// of exactly one 1-cell inside that k-cell.
bool one_cell_per_corner(const HierarchicalGraph& hg, std::string& witness) {
  const std::size_t theta = hg.theta();
  std::vector<std::uint32_t> anc(hg.cell_count(1));
  for (std::uint32_t i = 0; i < anc.size(); ++i) anc[i] = i;
  for (int k = 2; k <= hg.depth(); ++k) {
    lift(hg, k - 1, anc);
    std::vector<std::uint32_t> count(hg.cell_count(k) * theta, 0);
    for (std::size_t i = 0; i < anc.size(); ++i) {
      const auto outer = hg.cell_boundary(k, anc[i]);
      for (VertexId u : hg.cell_boundary(1, i)) {
        auto it = std::find(outer.begin(), outer.end(), u);
        if (it != outer.end()) ++count[anc[i] * theta + static_cast<std::size_t>(it - outer.begin())];
      }
    }
    for (std::size_t j = 0; j < count.size(); ++j) {
      if (count[j] != 1) {
        std::ostringstream w;
        w << "boundary vertex " << hg.cell_boundary(k, j / theta)[j % theta] << " of " << k
          << "-cell " << j / theta << " touches " << count[j] << " 1-cells";
        witness = w.str();
        return false;
      }
    }
  }
  return true;
}

// Interior level-≥1 vertices whose degree differs from their degree in
// reduce(G, level ≥ 1); also returns the reduced degrees.
std::vector<VertexId> reduced_degree_mismatches(const HierarchicalGraph& hg,
                                                std::vector<std::size_t>* reduced_degree) {
  const auto kept = level_at_least(hg, 1);
  const ReducedGraph red = reduce(hg.graph(), kept);
  const auto top = top_boundary_mask(hg);
  std::vector<VertexId> bad;
  if (reduced_degree) reduced_degree->assign(hg.vertex_count(), 0);
  for (VertexId i = 0; i < kept.size(); ++i) {
    const VertexId v = kept[i];
    if (reduced_degree) (*reduced_degree)[v] = red.graph.degree(i);
    if (!top[v] && red.graph.degree(i) != hg.graph().degree(v)) bad.push_back(v);
  }
  return bad;
}

}  // namespace

BoundedGeometryResult check_bounded_geometry(const CellModel& m, int n_max, GenerateOptions opts) {
  if (n_max < 3) throw InputError("check_bounded_geometry: depth must be at least 3");
  const Parameters p = model_parameters(m);
  const auto ladder = generate_ladder(m, n_max, opts);
  const HierarchicalGraph& deep = ladder.back();
  const DegreeCensus prev = degree_census(ladder[ladder.size() - 2]);
  const DegreeCensus last = degree_census(deep);

  BoundedGeometryResult out;
  out.hypothesis_met = p.b.has_value();
  auto& r = out.report;
  r.theorem = "geometry";
  r.model = m.name;
  r.depth_min = 1;
  r.depth_max = n_max;

  auto& c = out.conditions;
  c.bounded = prev.max_degree == last.max_degree;
  c.b_is_theta_minus_1 = p.b && *p.b == p.theta - 1;
  c.reduced_degree = c.bounded && reduced_degree_mismatches(deep, nullptr).empty();
  c.constant_boundary = std::all_of(ladder.begin(), ladder.end(), [&](const auto& hg) {
    return top_edge_boundary(hg) == p.delta;
  });
  std::string corner_witness;
  c.one_cell_per_corner = one_cell_per_corner(deep, corner_witness);
  c.delta_is_clique = p.delta == p.theta * (p.theta - 1);

  r.info(n_max, "delta", as_int(p.delta));
  r.info(n_max, "theta(theta-1)", as_int(p.theta * (p.theta - 1)));
  r.info(n_max - 1, "max interior degree", as_int(prev.max_degree));
  r.info(n_max, "max interior degree", as_int(last.max_degree));
  if (!corner_witness.empty()) r.notes.push_back("(v) " + corner_witness);

  const std::pair<const char*, bool> named[] = {
      {"(i) bounded geometry", c.bounded},
      {"(ii) b = theta-1", c.b_is_theta_minus_1},
      {"(iii) locally finite, deg_X = deg_X_F on F", c.reduced_degree},
      {"(iv) |dC_n| = delta for all n", c.constant_boundary},
      {"(v) one cell per boundary vertex", c.one_cell_per_corner},
      {"(vi) delta = theta(theta-1)", c.delta_is_clique},
  };
  if (!out.hypothesis_met) {
    for (const auto& [name, value] : named) r.info(n_max, name, std::int64_t{value});
    r.inapplicable("equivalence hypothesis (constant inner degree b) unmet");
    return out;
  }
  for (const auto& [name, value] : named) r.flag(n_max, name, c.b_is_theta_minus_1, value);
  return out;
}

std::string_view to_string(GeometryClass g) {
  switch (g) {
    case GeometryClass::Bounded: return "bounded";
    case GeometryClass::LocallyFiniteUnbounded: return "locally-finite-unbounded";
    case GeometryClass::NonLocallyFinite: return "non-locally-finite";
    case GeometryClass::Inapplicable: return "inapplicable";
  }
  return "?";
}

Classification classify_geometry(const CellModel& m, int depth, GenerateOptions opts) {
  if (depth < 2) throw InputError("classify_geometry: depth must be at least 2");
  const Parameters p = model_parameters(m);
  Classification out;
  auto& r = out.report;
  r.theorem = "trichotomy";
  r.model = m.name;
  r.depth_min = 1;
  r.depth_max = depth;
  if (!p.b) {
    r.inapplicable("no constant inner degree");
    return out;
  }
  if (*p.b == p.theta - 1) {
    out.kind = GeometryClass::Bounded;
    return out;
  }

  out.origin = detect_origin(m, depth, 6, opts);
  const OriginInfo& origin = *out.origin;
  for (const auto& e : origin.evidence) r.notes.push_back(e);
  if (!origin.resolved()) r.notes.push_back("origin dichotomy unresolved up to psi^6");

  if (origin.has_origin_vertex()) {
    out.kind = GeometryClass::NonLocallyFinite;
    const int last = std::max(depth, 6);
    const int top_depth = std::max(last, origin.depth);
    const auto ladder = generate_ladder(m, top_depth, opts);
    // Follow the origin vertex through the anchor embeddings to every depth.
    std::vector<std::optional<VertexId>> id(static_cast<std::size_t>(top_depth) + 1);
    id[static_cast<std::size_t>(origin.depth)] = std::get<OriginVertex>(origin.kind).vertex;
    for (int n = origin.depth; n > 1; --n) {
      const auto& cur = id[static_cast<std::size_t>(n)];
      if (!cur) break;
      const auto emb = ladder[static_cast<std::size_t>(n - 1)].embedding();
      auto it = std::find(emb.begin(), emb.end(), *cur);
      if (it != emb.end()) id[static_cast<std::size_t>(n - 1)] = static_cast<VertexId>(it - emb.begin());
    }
    for (int n = origin.depth + 1; n <= top_depth; ++n) {
      id[static_cast<std::size_t>(n)] =
          ladder[static_cast<std::size_t>(n - 1)].embedding()[*id[static_cast<std::size_t>(n - 1)]];
    }
    std::optional<std::size_t> previous;
    for (int n = 2; n <= last; ++n) {
      const auto& v = id[static_cast<std::size_t>(n)];
      if (!v) {
        r.fail("origin vertex not present in G_" + std::to_string(n));
        continue;
      }
      const std::size_t deg = ladder[static_cast<std::size_t>(n - 1)].graph().degree(*v);
      r.info(n, "origin vertex id", std::int64_t{*v});
      if (previous) {
        r.bound(n, "origin vertex degree at n-1 < degree at n", as_int(deg),
                static_cast<std::int64_t>(*previous), Relation::Less);
      }
      r.info(n, "origin vertex degree", as_int(deg));
      previous = deg;
    }
    return out;
  }

  out.kind = GeometryClass::LocallyFiniteUnbounded;
  // Finite witness of unbounded but finite degrees: an interior vertex of
  // level j lies on cells_j(v) j-cells and meets (δ/θ)(b/(θ−1))^(j−1) edges
  // in each.
  const auto hg = generate(m, depth, opts);
  const auto top = top_boundary_mask(hg);
  const std::int64_t theta = static_cast<std::int64_t>(p.theta);
  const std::int64_t b = static_cast<std::int64_t>(*p.b);
  for (int j = 1; j < depth; ++j) {
    std::vector<std::uint32_t> cells(hg.vertex_count(), 0);
    for (std::size_t i = 0; i < hg.cell_count(j); ++i) {
      for (VertexId u : hg.cell_boundary(j, i)) ++cells[u];
    }
    std::int64_t mismatches = 0, max_deg = 0;
    for (VertexId v = 0; v < hg.vertex_count(); ++v) {
      if (top[v] || hg.level(v) != j) continue;
      const std::int64_t deg = as_int(hg.graph().degree(v));
      max_deg = std::max(max_deg, deg);
      const std::int64_t lhs = deg * theta * ipow(theta - 1, j - 1);
      const std::int64_t rhs = std::int64_t{cells[v]} * static_cast<std::int64_t>(p.delta) * ipow(b, j - 1);
      if (lhs != rhs) ++mismatches;
    }
    r.exact(j, "level-j vertices off deg = cells_j*(delta/theta)*(b/(theta-1))^(j-1)", 0, mismatches);
    r.info(j, "max degree at level j", max_deg);
  }
  return out;
}

TheoremReport check_cell_volume(const CellModel& m, int n_max, GenerateOptions opts) {
  const Parameters p = model_parameters(m);
  TheoremReport r;
  r.theorem = "volume";
  r.model = m.name;
  r.depth_min = 1;
  r.depth_max = n_max;
  const auto ladder = generate_ladder(m, n_max, opts);
  std::vector<int> literal_fails;
  for (const auto& hg : ladder) {
    const int n = hg.depth();
    const auto& g = hg.graph();
    const std::int64_t predicted =
        ipow(static_cast<std::int64_t>(p.mu), n) * static_cast<std::int64_t>(p.theta * (p.theta - 1));
    std::vector<VertexId> all(g.vertex_count());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    const std::int64_t closed = as_int(volume(g, all));
    std::vector<VertexId> interior;
    const auto top = top_boundary_mask(hg);
    for (VertexId v = 0; v < all.size(); ++v) {
      if (!top[v]) interior.push_back(v);
    }
    const std::int64_t inner = as_int(volume(g, interior));
    const std::int64_t dcn = as_int(top_edge_boundary(hg));
    r.exact(n, "Vol closed cell", predicted, closed);
    r.exact(n, "2|E|", predicted, 2 * as_int(g.edge_count()));
    r.exact(n, "Vol interior = Vol closed - |dC_n|", predicted - dcn, inner);
    const bool literal = inner == predicted - static_cast<std::int64_t>(p.delta);
    r.info(n, "Vol interior = Vol closed - delta_X holds", std::int64_t{literal});
    if (!literal) literal_fails.push_back(n);
  }
  if (!literal_fails.empty()) {
    std::ostringstream note;
    note << "interior volume differs from closed volume - delta_X at n =";
    for (int n : literal_fails) note << ' ' << n;
    note << "; the - |dC_n| form holds";
    r.notes.push_back(note.str());
  }
  return r;
}

TheoremReport check_diameters(const CellModel& m, int n_max, GenerateOptions opts) {
  const Parameters p = model_parameters(m);
  TheoremReport r;
  r.theorem = "diameter";
  r.model = m.name;
  r.depth_min = 1;
  r.depth_max = n_max;
  const std::int64_t nu = p.nu, rho = p.rho;
  const auto ladder = generate_ladder(m, n_max, opts);
  for (const auto& hg : ladder) {
    const int n = hg.depth();
    const auto& g = hg.graph();
    const std::int64_t nun = ipow(nu, n);

    std::int64_t pair_min = std::numeric_limits<std::int64_t>::max(), pair_max = 0, ecc = 0;
    for (VertexId v : hg.boundary()) {
      const DistanceMap d = bfs_distances(g, std::span<const VertexId>(&v, 1));
      for (VertexId w : hg.boundary()) {
        if (w == v) continue;
        pair_min = std::min<std::int64_t>(pair_min, d.at(w));
        pair_max = std::max<std::int64_t>(pair_max, d.at(w));
      }
      ecc = std::max<std::int64_t>(ecc, d.max_finite());
    }
    r.exact(n, "(i) min boundary pair distance", nun, pair_min);
    r.exact(n, "(i) max boundary pair distance", nun, pair_max);

    const std::int64_t upper_ii = nun + rho * (nun - 1) / (nu - 1);
    r.bound(n, "(ii) max d(x, boundary vertex) lower", nun, ecc, Relation::GreaterEq);
    r.bound(n, "(ii) max d(x, boundary vertex) upper", upper_ii, ecc, Relation::LessEq);
    r.info(n, "(ii) upper bound attained", std::int64_t{ecc == upper_ii});

    std::int64_t diam = 0;
    try {
      diam = diameter(g);
    } catch (const CapExceeded& e) {
      r.notes.push_back("(iii) skipped at n=" + std::to_string(n) + ": " + e.what());
      continue;
    }
    const std::int64_t upper_iii = nun + rho * (ipow(nu, n - 1) * (nu + 1) - 2) / (nu - 1);
    r.bound(n, "(iii) diam lower", nun, diam, Relation::GreaterEq);
    r.bound(n, "(iii) diam upper", upper_iii, diam, Relation::LessEq);
    // diam < ν^(n+κ̃) = νⁿ(ν+3ρ)/ν, compared after multiplying by ν; equality
    // is the ρ = 0 case.
    r.bound(n, "(iii) nu*diam vs nu^n*(nu+3rho)", nun * (nu + 3 * rho), nu * diam,
            rho > 0 ? Relation::Less : Relation::LessEq);
    r.info(n, "(iii) upper bound attained", std::int64_t{diam == upper_iii});
  }
  return r;
}

TheoremReport check_cells_lemma(const CellModel& m, int n, GenerateOptions opts) {
  if (n < 3) throw InputError("check_cells_lemma: depth must be at least 3");
  const Parameters p = deep_parameters(m, n, opts);
  const HierarchicalGraph hg = generate(m, n, opts);
  const DegreeCensus census = degree_census(hg);
  std::vector<std::size_t> reduced;
  reduced_degree_mismatches(hg, &reduced);
  const auto top = top_boundary_mask(hg);

  TheoremReport r;
  r.theorem = "cells";
  r.model = m.name;
  r.depth_min = n;
  r.depth_max = n;
  std::int64_t checked = 0, mismatches = 0;
  for (VertexId v = 0; v < hg.vertex_count(); ++v) {
    if (top[v] || hg.level(v) < 1) continue;
    ++checked;
    if (census.cells[v] * (p.theta - 1) != reduced[v]) {
      if (mismatches < 8) {
        r.witnesses.push_back("vertex " + std::to_string(v) + ": cells " +
                              std::to_string(census.cells[v]) + ", reduced degree " +
                              std::to_string(reduced[v]));
      }
      ++mismatches;
    }
  }
  r.info(n, "interior F-vertices checked", checked);
  r.exact(n, "vertices with cells*(theta-1) != reduced degree", 0, mismatches);
  if (p.c_stabilized && p.max_degree_stabilized) {
    r.exact(n, "c*(theta-1) = M", as_int(*p.max_degree), as_int(*p.c * (p.theta - 1)));
  } else {
    r.info(n, "c", as_int(*p.c));
    r.info(n, "M", as_int(*p.max_degree));
    r.notes.push_back("c or M not stabilized between depths " + std::to_string(n - 1) + " and " +
                      std::to_string(n) + "; corollary not evaluated");
  }
  return r;
}

}  // namespace selfsim
