#include <algorithm>
#include <sstream>

#include "selfsim/substitution.hpp"

namespace selfsim {

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

struct Candidates {
  std::vector<VertexId> fixed;  // ids in Gₙ
  std::vector<std::size_t> cells;
};

// ladder[i] is Gᵢ₊₁; psi1[i] maps Gᵢ ids into Gᵢ₊₁ (index 0 unused).
Candidates fixed_structure(const std::vector<HierarchicalGraph>& ladder,
                           const std::vector<std::vector<VertexId>>& psi1, int n, int k) {
  const HierarchicalGraph& top = ladder[static_cast<std::size_t>(n - 1)];
  const std::size_t lower_n = ladder[static_cast<std::size_t>(n - k - 1)].vertex_count();

  // ψᵏ and ιᵏ from G_{n−k} into Gₙ, composed one level at a time.
  std::vector<VertexId> psi(lower_n), iota(lower_n);
  for (VertexId v = 0; v < lower_n; ++v) psi[v] = iota[v] = v;
  for (int m = n - k + 1; m <= n; ++m) {
    const auto& step_psi = psi1[static_cast<std::size_t>(m - 1)];
    const auto step_iota = ladder[static_cast<std::size_t>(m - 1)].embedding();
    for (VertexId v = 0; v < lower_n; ++v) {
      psi[v] = step_psi[psi[v]];
      iota[v] = step_iota[iota[v]];
    }
  }

  Candidates out;
  for (VertexId v = 0; v < lower_n; ++v) {
    if (psi[v] == iota[v]) out.fixed.push_back(psi[v]);
  }
  std::sort(out.fixed.begin(), out.fixed.end());
  if (!out.fixed.empty()) return out;

  // φᵏ = ιᵏ ∘ (ψᵏ)⁻¹ on level-≥k vertices of Gₙ.
  std::vector<VertexId> phi(top.vertex_count(), kNone);
  for (VertexId v = 0; v < lower_n; ++v) phi[psi[v]] = iota[v];
  for (std::size_t i = 0; i < top.cell_count(k); ++i) {
    const Cell c = top.cell(k, i);
    bool inside = true;
    for (VertexId u : c.boundary) {
      if (phi[u] == kNone || !c.in_closure(phi[u])) {
        inside = false;
        break;
      }
    }
    if (inside) out.cells.push_back(i);
  }
  return out;
}

std::string describe(const Candidates& c, int n, int k) {
  std::ostringstream out;
  out << "psi^" << k << " at depth " << n << ": " << c.fixed.size() << " fixed vertices";
  if (!c.fixed.empty()) {
    out << " {";
    for (std::size_t i = 0; i < c.fixed.size() && i < 8; ++i) out << (i ? "," : "") << c.fixed[i];
    out << (c.fixed.size() > 8 ? ",...}" : "}");
  } else {
    out << ", " << c.cells.size() << " cells C with phi^" << k << "(theta C) in closure(C)";
  }
  return out.str();
}

}  // namespace

OriginInfo detect_origin(const CellModel& m, int depth, int k_max, GenerateOptions opts) {
  if (k_max < 1) throw InputError("detect_origin: k_max must be positive");
  OriginInfo info;
  std::vector<HierarchicalGraph> ladder;
  std::vector<std::vector<VertexId>> psi1(1);
  ladder.push_back(first_generation(m));

  auto extend_to = [&](int n) {
    while (static_cast<int>(ladder.size()) < n) {
      checked_edge_count(m, static_cast<int>(ladder.size()) + 1, opts.edge_cap);
      ladder.push_back(substitute(m, ladder.back()));
      const auto& upper = ladder.back();
      auto map = canonical_reduction_map(upper, 1, ladder[ladder.size() - 2]);
      if (!map) {
        throw InputError("detect_origin: no reduction witness at depth " +
                         std::to_string(upper.depth()));
      }
      psi1.push_back(std::move(*map));
    }
  };

  for (int k = 1; k <= k_max; ++k) {
    const int n1 = std::max(depth, k + 1);
    const int n2 = n1 + 1;
    try {
      extend_to(n2);
    } catch (const CapExceeded& e) {
      info.evidence.push_back("psi^" + std::to_string(k) + ": " + e.what());
      return info;
    }
    const Candidates c1 = fixed_structure(ladder, psi1, n1, k);
    const Candidates c2 = fixed_structure(ladder, psi1, n2, k);
    info.evidence.push_back(describe(c1, n1, k));
    info.evidence.push_back(describe(c2, n2, k));
    const auto embed = ladder[static_cast<std::size_t>(n2 - 1)].embedding();

    if (c1.fixed.size() == 1 && c2.fixed.size() == 1) {
      if (embed[c1.fixed[0]] == c2.fixed[0]) {
        info.stabilizing_power = k;
        info.kind = OriginVertex{c2.fixed[0]};
        info.depth = n2;
        return info;
      }
      info.evidence.push_back("fixed vertices at depths " + std::to_string(n1) + " and " +
                              std::to_string(n2) + " do not correspond");
      continue;
    }
    if (c1.fixed.empty() && c2.fixed.empty() && c1.cells.size() == 1 && c2.cells.size() == 1) {
      const Cell a = ladder[static_cast<std::size_t>(n1 - 1)].cell(k, c1.cells[0]);
      const Cell b = ladder[static_cast<std::size_t>(n2 - 1)].cell(k, c2.cells[0]);
      const auto inner = a.interior();
      if (!inner.empty() && b.in_interior(embed[inner.front()])) {
        info.stabilizing_power = k;
        info.kind = OriginCell{k, b.index, b.slot_path, b.boundary};
        info.depth = n2;
        return info;
      }
      info.evidence.push_back("origin cells at depths " + std::to_string(n1) + " and " +
                              std::to_string(n2) + " do not correspond");
    }
  }
  return info;
}

}  // namespace selfsim
