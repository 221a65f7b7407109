#include "selfsim/substitution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace selfsim {

bool Cell::in_interior(VertexId v) const {
  return span.contains(v) && std::find(boundary.begin(), boundary.end(), v) == boundary.end();
}

bool Cell::in_closure(VertexId v) const {
  return span.contains(v) || std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

std::vector<VertexId> Cell::interior() const {
  std::vector<VertexId> out;
  out.reserve(span.size());
  for (VertexId v = span.begin; v < span.end; ++v) {
    if (std::find(boundary.begin(), boundary.end(), v) == boundary.end()) out.push_back(v);
  }
  return out;
}

bool HierarchicalGraph::on_boundary(VertexId v) const {
  return std::find(boundary_.begin(), boundary_.end(), v) != boundary_.end();
}

Cell HierarchicalGraph::cell(int k, std::size_t i) const {
  if (k < 1 || k > depth_) throw InputError("cell level out of range");
  Cell c;
  c.level = k;
  c.index = i;
  c.span = cell_record(k, i).span;
  auto b = cell_boundary(k, i);
  c.boundary.assign(b.begin(), b.end());
  if (k < depth_) c.parent = cell_record(k, i).parent;
  std::size_t idx = i;
  for (int lvl = k; lvl < depth_; ++lvl) {
    const auto& rec = cell_record(lvl, idx);
    c.slot_path.push_back(rec.slot);
    idx = rec.parent;
  }
  std::reverse(c.slot_path.begin(), c.slot_path.end());
  return c;
}

namespace {

std::string model_fingerprint(const CellModel& m, const FiniteGraph& g) {
  std::ostringstream out;
  out << "V" << m.vertex_count << ";B";
  for (VertexId v : m.boundary) out << v << ',';
  out << ";E";
  for (const auto& [u, v] : g.edges()) out << u << '-' << v << ',';
  return out.str();
}

}  // namespace

HierarchicalGraph first_generation(const CellModel& m) {
  const ValidationReport report = validate(m);
  if (!report.pass) {
    for (const auto& c : report.checks) {
      if (!c.pass) throw InputError("model '" + m.name + "' fails " + c.axiom + ": " + c.detail);
    }
  }
  HierarchicalGraph hg;
  hg.graph_ = m.graph();
  hg.depth_ = 1;
  hg.theta_ = m.theta();
  hg.levels_.assign(m.vertex_count, 0);
  for (VertexId v : m.boundary) hg.levels_[v] = 1;
  hg.boundary_ = m.boundary;
  hg.cells_ = {{HierarchicalGraph::CellRecord{{0, static_cast<VertexId>(m.vertex_count)}, 0, 0}}};
  hg.cell_boundaries_ = {m.boundary};
  hg.fingerprint_ = model_fingerprint(m, hg.graph_);
  return hg;
}

HierarchicalGraph substitute(const CellModel& m, const HierarchicalGraph& inner) {
  const std::size_t theta = m.theta();
  const FiniteGraph model_graph = m.graph();
  if (inner.theta() != theta || inner.fingerprint() != model_fingerprint(m, model_graph)) {
    throw InputError("substitute: inner graph was not generated from model '" + m.name + "'");
  }
  const std::size_t inner_n = inner.vertex_count();
  const std::size_t block = inner_n - theta;
  const std::size_t n_model = m.vertex_count;
  const std::size_t mu = m.mu();
  const std::size_t total = n_model + mu * block;
  if (total > std::numeric_limits<VertexId>::max()) throw CapExceeded("vertex ids exhausted");

  // Position of each inner vertex in the inner boundary, or its rank among
  // the non-boundary vertices.
  std::vector<std::int64_t> boundary_pos(inner_n, -1);
  for (std::size_t j = 0; j < theta; ++j) boundary_pos[inner.boundary()[j]] = static_cast<std::int64_t>(j);
  std::vector<VertexId> rank(inner_n, 0);
  {
    VertexId next = 0;
    for (VertexId v = 0; v < inner_n; ++v) {
      if (boundary_pos[v] < 0) rank[v] = next++;
    }
  }
  auto map_into = [&](std::size_t slot, VertexId v) -> VertexId {
    if (boundary_pos[v] >= 0) return m.slots[slot][static_cast<std::size_t>(boundary_pos[v])];
    return static_cast<VertexId>(n_model + slot * block + rank[v]);
  };

  HierarchicalGraph hg;
  hg.depth_ = inner.depth() + 1;
  hg.theta_ = theta;
  hg.boundary_ = m.boundary;
  hg.fingerprint_ = inner.fingerprint();

  {
    const auto inner_edges = inner.graph().edges();
    std::vector<Edge> edges;
    edges.reserve(inner_edges.size() * mu);
    for (std::size_t s = 0; s < mu; ++s) {
      for (const auto& [u, v] : inner_edges) edges.emplace_back(map_into(s, u), map_into(s, v));
    }
    hg.graph_ = FiniteGraph::from_edges(total, edges);
  }

  hg.levels_.assign(total, 0);
  for (VertexId v = 0; v < n_model; ++v) hg.levels_[v] = inner.depth();
  for (VertexId v : m.boundary) hg.levels_[v] = hg.depth_;
  for (std::size_t s = 0; s < mu; ++s) {
    for (VertexId v = 0; v < inner_n; ++v) {
      if (boundary_pos[v] < 0) hg.levels_[map_into(s, v)] = inner.level(v);
    }
  }

  hg.embedding_.resize(inner_n);
  for (VertexId v = 0; v < inner_n; ++v) hg.embedding_[v] = map_into(m.anchor_slot, v);

  const int inner_depth = inner.depth();
  hg.cells_.resize(static_cast<std::size_t>(hg.depth_));
  hg.cell_boundaries_.resize(static_cast<std::size_t>(hg.depth_));
  for (int k = 1; k <= inner_depth; ++k) {
    const std::size_t count = inner.cell_count(k);
    const std::size_t parent_count = k < inner_depth ? inner.cell_count(k + 1) : 1;
    auto& records = hg.cells_[k - 1];
    auto& bounds = hg.cell_boundaries_[k - 1];
    records.reserve(count * mu);
    bounds.reserve(count * mu * theta);
    for (std::size_t s = 0; s < mu; ++s) {
      for (std::size_t i = 0; i < count; ++i) {
        const auto& rec = inner.cell_record(k, i);
        HierarchicalGraph::CellRecord out;
        if (k == inner_depth) {
          const auto first = static_cast<VertexId>(n_model + s * block);
          out.span = {first, static_cast<VertexId>(first + block)};
          out.parent = 0;
          out.slot = static_cast<std::uint32_t>(s);
        } else {
          const VertexId first = map_into(s, rec.span.begin);
          out.span = {first, static_cast<VertexId>(first + rec.span.size())};
          out.parent = static_cast<std::uint32_t>(s * parent_count + rec.parent);
          out.slot = rec.slot;
        }
        records.push_back(out);
        for (VertexId v : inner.cell_boundary(k, i)) bounds.push_back(map_into(s, v));
      }
    }
  }
  hg.cells_.back() = {HierarchicalGraph::CellRecord{{0, static_cast<VertexId>(total)}, 0, 0}};
  hg.cell_boundaries_.back() = m.boundary;
  return hg;
}

std::uint64_t checked_edge_count(const CellModel& m, int n, std::uint64_t edge_cap) {
  if (n < 1) throw InputError("generation depth must be at least 1");
  const std::uint64_t per_slot = m.theta() * (m.theta() - 1) / 2;
  unsigned __int128 mu_n = 1;
  for (int i = 0; i < n; ++i) {
    mu_n *= m.mu();
    if (mu_n * per_slot > edge_cap) {
      throw CapExceeded("generate: mu^" + std::to_string(n) + " = " + std::to_string(m.mu()) +
                        "^" + std::to_string(n) + " edge cliques exceed the edge cap of " +
                        std::to_string(edge_cap));
    }
  }
  return static_cast<std::uint64_t>(mu_n * per_slot);
}

HierarchicalGraph generate(const CellModel& m, int n, GenerateOptions opts) {
  checked_edge_count(m, n, opts.edge_cap);
  HierarchicalGraph hg = first_generation(m);
  for (int k = 2; k <= n; ++k) hg = substitute(m, hg);
  return hg;
}

std::vector<HierarchicalGraph> generate_ladder(const CellModel& m, int n, GenerateOptions opts) {
  checked_edge_count(m, n, opts.edge_cap);
  std::vector<HierarchicalGraph> ladder;
  ladder.reserve(static_cast<std::size_t>(n));
  ladder.push_back(first_generation(m));
  for (int k = 2; k <= n; ++k) ladder.push_back(substitute(m, ladder.back()));
  return ladder;
}

std::vector<Cell> cells_at_level(const HierarchicalGraph& hg, int k) {
  if (k < 1 || k > hg.depth()) {
    throw InputError("cells_at_level: level " + std::to_string(k) + " outside 1.." +
                     std::to_string(hg.depth()));
  }
  std::vector<Cell> out;
  out.reserve(hg.cell_count(k));
  for (std::size_t i = 0; i < hg.cell_count(k); ++i) out.push_back(hg.cell(k, i));
  return out;
}

std::vector<VertexId> level_at_least(const HierarchicalGraph& hg, int k) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < hg.vertex_count(); ++v) {
    if (hg.level(v) >= k) out.push_back(v);
  }
  return out;
}

namespace {

std::vector<int> shifted_levels(const HierarchicalGraph& hg, std::span<const VertexId> ids,
                                int k) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (VertexId v : ids) out.push_back(hg.level(v) - k);
  return out;
}

}  // namespace

std::optional<std::vector<VertexId>> canonical_reduction_map(const HierarchicalGraph& upper,
                                                             int k,
                                                             const HierarchicalGraph& lower) {
  if (k < 1 || upper.depth() - k != lower.depth()) {
    throw InputError("canonical_reduction_map: depths do not match");
  }
  std::vector<VertexId> kept = level_at_least(upper, k);
  if (kept.size() != lower.vertex_count()) return std::nullopt;
  const ReducedGraph reduced = reduce(upper.graph(), kept);
  const std::vector<int> labels = shifted_levels(upper, kept, k);
  std::vector<VertexId> identity(kept.size());
  for (VertexId i = 0; i < identity.size(); ++i) identity[i] = i;
  if (!is_isomorphism(lower.graph(), lower.levels(), reduced.graph, labels, identity)) {
    return std::nullopt;
  }
  for (std::size_t j = 0; j < upper.theta(); ++j) {
    if (kept[lower.boundary()[j]] != upper.boundary()[j]) return std::nullopt;
  }
  return kept;
}

ReductionCheck verify_reduction_isomorphism(std::span<const HierarchicalGraph> ladder,
                                            const std::string& model_name) {
  if (ladder.size() < 2) throw InputError("verify_reduction_isomorphism: depth must be >= 2");
  const HierarchicalGraph& top = ladder.back();
  const int n = top.depth();
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i].depth() != static_cast<int>(i) + 1) {
      throw InputError("verify_reduction_isomorphism: ladder must hold G_1..G_n in order");
    }
  }
  ReductionCheck out;
  out.report.theorem = "selfsim";
  out.report.model = model_name;
  out.report.depth_min = 1;
  out.report.depth_max = n;

  for (int k = 1; k < n; ++k) {
    const HierarchicalGraph& lower = ladder[static_cast<std::size_t>(n - k - 1)];
    const std::vector<VertexId> kept = level_at_least(top, k);
    const ReducedGraph reduced = reduce(top.graph(), kept);
    const std::vector<int> labels = shifted_levels(top, kept, k);

    auto found = isomorphism(reduced.graph, labels, lower.graph(), lower.levels());
    auto canonical = canonical_reduction_map(top, k, lower);
    out.report.flag(k, "reduce(G_n, level>=k) isomorphic to G_(n-k)", true, found.has_value());
    out.report.flag(k, "canonical map is an isomorphism", true, canonical.has_value());

    if (!found) {
      std::ostringstream w;
      w << "k=" << k << ": reduced graph has " << reduced.graph.vertex_count() << " vertices, "
        << reduced.graph.edge_count() << " edges; G_" << (n - k) << " has "
        << lower.vertex_count() << " vertices, " << lower.graph().edge_count() << " edges";
      std::map<std::pair<int, std::size_t>, long> hist;
      for (VertexId v = 0; v < reduced.graph.vertex_count(); ++v)
        ++hist[{labels[v], reduced.graph.degree(v)}];
      for (VertexId v = 0; v < lower.vertex_count(); ++v)
        --hist[{lower.level(v), lower.graph().degree(v)}];
      for (const auto& [key, diff] : hist) {
        if (diff != 0) {
          w << "; (level " << key.first << ", degree " << key.second << ") count differs by "
            << diff;
          break;
        }
      }
      out.report.witnesses.push_back(w.str());
    }
    if (k == 1) {
      if (canonical) {
        out.psi = *canonical;
      } else if (found) {
        // found: reduced id -> lower id; invert and lift to top ids.
        out.psi.assign(lower.vertex_count(), 0);
        for (VertexId r = 0; r < found->size(); ++r) out.psi[(*found)[r]] = kept[r];
      }
    }
  }
  return out;
}

ReductionCheck verify_reduction_isomorphism(const CellModel& m, int n, GenerateOptions opts) {
  if (n < 2) throw InputError("verify_reduction_isomorphism: depth must be >= 2");
  const auto ladder = generate_ladder(m, n, opts);
  return verify_reduction_isomorphism(ladder, m.name);
}

}  // namespace selfsim
