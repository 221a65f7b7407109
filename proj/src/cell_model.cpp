#include "selfsim/cell_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace selfsim {

FiniteGraph CellModel::graph() const {
  std::vector<Edge> edges;
  for (const auto& slot : slots) {
    for (std::size_t i = 0; i < slot.size(); ++i) {
      for (std::size_t j = i + 1; j < slot.size(); ++j) {
        if (slot[i] >= vertex_count || slot[j] >= vertex_count) {
          throw InputError("model '" + name + "': slot vertex out of range");
        }
        edges.emplace_back(slot[i], slot[j]);
      }
    }
  }
  return FiniteGraph::from_edges(vertex_count, edges);
}

std::vector<VertexId> CellModel::interior() const {
  std::vector<char> on(vertex_count, 0);
  for (VertexId v : boundary) {
    if (v < vertex_count) on[v] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (!on[v]) out.push_back(v);
  }
  return out;
}

const AxiomCheck* ValidationReport::find(std::string_view axiom) const {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return &c;
  }
  return nullptr;
}

namespace {

AxiomCheck check_structure(const CellModel& m) {
  AxiomCheck c{"structure", true, {}, ""};
  auto fail = [&](std::string why) {
    if (c.pass) {
      c.pass = false;
      c.detail = std::move(why);
    }
  };
  if (m.vertex_count == 0) fail("vertex count must be positive");
  if (m.theta() < 2) fail("boundary needs at least 2 vertices");
  if (m.mu() < 2) fail("at least 2 slots required");
  if (m.anchor_slot >= m.mu()) fail("anchor_slot out of range");
  std::set<VertexId> seen;
  for (VertexId v : m.boundary) {
    if (v >= m.vertex_count) fail("boundary vertex " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second) fail("boundary vertex " + std::to_string(v) + " repeated");
  }
  for (std::size_t s = 0; s < m.mu(); ++s) {
    const auto& slot = m.slots[s];
    if (slot.size() != m.theta()) {
      fail("slot " + std::to_string(s) + " has " + std::to_string(slot.size()) +
           " entries, expected " + std::to_string(m.theta()));
      c.witness = {static_cast<VertexId>(s)};
    }
    std::set<VertexId> in_slot;
    for (VertexId v : slot) {
      if (v >= m.vertex_count) fail("slot " + std::to_string(s) + " vertex out of range");
      if (!in_slot.insert(v).second) fail("slot " + std::to_string(s) + " repeats a vertex");
    }
  }
  return c;
}

// Slot index pairs sharing >= 2 vertices, and unordered vertex pairs lying in
// two slots, are detected in one pass.
void check_slot_structure(const CellModel& m, AxiomCheck& partition, AxiomCheck& overlap) {
  std::vector<std::set<VertexId>> sets;
  for (const auto& slot : m.slots) sets.emplace_back(slot.begin(), slot.end());
  for (std::size_t s = 0; s < m.mu(); ++s) {
    for (std::size_t t = s + 1; t < m.mu(); ++t) {
      std::vector<VertexId> shared;
      std::set_intersection(sets[s].begin(), sets[s].end(), sets[t].begin(), sets[t].end(),
                            std::back_inserter(shared));
      if (shared.size() >= 2) {
        if (partition.pass) {
          partition.pass = false;
          partition.witness = {shared[0], shared[1]};
          partition.detail = "pair (" + std::to_string(shared[0]) + ", " +
                             std::to_string(shared[1]) + ") lies in slots " +
                             std::to_string(s) + " and " + std::to_string(t);
        }
        if (overlap.pass) {
          overlap.pass = false;
          overlap.witness = {static_cast<VertexId>(s), static_cast<VertexId>(t)};
          overlap.detail = "slots " + std::to_string(s) + " and " + std::to_string(t) +
                           " share " + std::to_string(shared.size()) + " vertices";
        }
      }
    }
  }
}

}  // namespace

ValidationReport validate(const CellModel& m) {
  ValidationReport report;
  report.model = m.name;
  report.checks.push_back(check_structure(m));
  if (!report.checks.back().pass) {
    report.pass = false;
    return report;
  }

  const FiniteGraph g = m.graph();
  std::vector<char> on_boundary(m.vertex_count, 0);
  for (VertexId v : m.boundary) on_boundary[v] = 1;

  AxiomCheck coverage{"coverage", true, {}, ""};
  {
    std::vector<char> covered(m.vertex_count, 0);
    for (const auto& slot : m.slots) {
      for (VertexId v : slot) covered[v] = 1;
    }
    for (VertexId v = 0; v < m.vertex_count; ++v) {
      if (!covered[v]) {
        coverage.pass = false;
        coverage.witness = {v};
        coverage.detail = "vertex " + std::to_string(v) + " lies in no slot";
        break;
      }
    }
  }

  AxiomCheck partition{"edge_partition", true, {}, ""};
  AxiomCheck overlap{"slot_overlap", true, {}, ""};
  check_slot_structure(m, partition, overlap);

  AxiomCheck f1{"f1", true, {}, ""};
  for (std::size_t s = 0; s < m.mu() && f1.pass; ++s) {
    std::vector<VertexId> hits;
    for (VertexId v : m.slots[s]) {
      if (on_boundary[v]) hits.push_back(v);
    }
    if (hits.size() >= 2) {
      f1.pass = false;
      f1.witness = {hits[0], hits[1]};
      f1.detail = "slot " + std::to_string(s) + " joins boundary vertices " +
                  std::to_string(hits[0]) + " and " + std::to_string(hits[1]);
    }
  }

  const auto parts = components(g, m.boundary);

  AxiomCheck f2{"f2", true, {}, ""};
  {
    std::vector<std::vector<VertexId>> closures;
    for (const auto& comp : parts) closures.push_back(boundary(g, comp).closure);
    for (std::size_t i = 0; i < closures.size() && f2.pass; ++i) {
      for (std::size_t j = i + 1; j < closures.size(); ++j) {
        std::vector<VertexId> shared;
        std::set_intersection(closures[i].begin(), closures[i].end(), closures[j].begin(),
                              closures[j].end(), std::back_inserter(shared));
        if (shared.size() >= 2) {
          f2.pass = false;
          f2.witness = shared;
          f2.detail = "closures of interior components " + std::to_string(i) + " and " +
                      std::to_string(j) + " share " + std::to_string(shared.size()) +
                      " vertices";
          break;
        }
      }
    }
  }

  AxiomCheck connectivity{"connectivity", true, {}, ""};
  {
    const auto whole = components(g, {});
    if (whole.size() != 1) {
      connectivity.pass = false;
      connectivity.witness = whole[1];
      connectivity.detail = "model graph has " + std::to_string(whole.size()) + " components";
    } else if (parts.size() != 1) {
      connectivity.pass = false;
      connectivity.witness = parts.empty() ? std::vector<VertexId>{} : parts[1];
      connectivity.detail = "cell interior has " + std::to_string(parts.size()) + " components";
    }
  }

  AxiomCheck h2{"h2_level1", true, {}, ""};
  std::optional<std::uint32_t> common;
  for (std::size_t i = 0; i < m.theta() && h2.pass; ++i) {
    const VertexId src = m.boundary[i];
    const DistanceMap d = bfs_distances(g, std::span<const VertexId>(&src, 1));
    for (std::size_t j = 0; j < m.theta(); ++j) {
      if (i == j) continue;
      auto dij = d[m.boundary[j]];
      if (!dij) {
        h2.pass = false;
        h2.witness = {m.boundary[i], m.boundary[j]};
        h2.detail = "boundary vertices not connected";
        break;
      }
      if (!common) common = *dij;
      if (*dij != *common) {
        h2.pass = false;
        h2.witness = {m.boundary[i], m.boundary[j]};
        h2.detail = "boundary distance " + std::to_string(*dij) + " differs from " +
                    std::to_string(*common);
        break;
      }
    }
  }

  for (auto* c : {&coverage, &partition, &overlap, &f1, &f2, &connectivity, &h2}) {
    report.pass = report.pass && c->pass;
    report.checks.push_back(std::move(*c));
  }
  if (report.find("h2_level1")->pass) report.nu = common;
  return report;
}

int kappa_for(std::uint32_t nu, std::uint32_t rho) {
  const std::uint64_t target = std::uint64_t{nu} + 3 * std::uint64_t{rho};
  int k = 0;
  std::uint64_t power = nu;  // ν^(k+1)
  while (power < target) {
    power *= nu;
    ++k;
  }
  return k;
}

Parameters model_parameters(const CellModel& m) {
  const ValidationReport report = validate(m);
  if (!report.pass) {
    for (const auto& c : report.checks) {
      if (!c.pass) {
        throw InputError("model '" + m.name + "' fails " + c.axiom + ": " + c.detail);
      }
    }
  }
  const FiniteGraph g = m.graph();
  Parameters p;
  p.theta = m.theta();
  p.mu = m.mu();
  p.nu = *report.nu;
  p.lambda = diameter(g);
  p.rho = p.lambda - p.nu;
  const auto interior = m.interior();
  p.delta = boundary(g, interior).delta.size();

  const std::size_t first = g.degree(m.boundary.front());
  bool constant = std::all_of(m.boundary.begin(), m.boundary.end(),
                              [&](VertexId v) { return g.degree(v) == first; });
  if (constant) p.b = first;

  p.kappa_tilde = std::log(static_cast<double>(p.nu + 3 * p.rho)) /
                      std::log(static_cast<double>(p.nu)) -
                  1.0;
  p.kappa = kappa_for(p.nu, p.rho);
  p.dim_predicted = std::log(static_cast<double>(p.mu)) / std::log(static_cast<double>(p.nu));
  return p;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"line",         "sierpinski",    "tree4",
                                              "diamond_open", "diamond_fixed", "lopsided3"};
  return names;
}

CellModel builtin(std::string_view name) {
  if (name == "line") {
    // u=0, a=1, w=2
    return {"line", 3, {0, 2}, {{0, 1}, {1, 2}}, 0};
  }
  if (name == "sierpinski") {
    // corners A,B,C = 0,1,2; midpoints x=3 (AB), y=4 (BC), z=5 (CA)
    return {"sierpinski", 6, {0, 1, 2}, {{0, 3, 5}, {1, 3, 4}, {2, 4, 5}}, 0};
  }
  if (name == "tree4") {
    // u=0, m=1, w=2, p=3, q=4: path u-m-w with pendant path m-p-q
    return {"tree4", 5, {0, 2}, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}, 0};
  }
  if (name == "diamond_open" || name == "diamond_fixed") {
    // v=0, v~=1, a=2, b=3: K4 minus the edge v-v~. The open variant anchors
    // on the inner slot [a,b] so that no vertex is fixed; the fixed variant
    // anchors on [v,a], which keeps v in place.
    CellModel m{std::string(name), 4, {0, 1}, {{0, 2}, {0, 3}, {2, 3}, {2, 1}, {3, 1}}, 0};
    m.anchor_slot = name == "diamond_open" ? 2 : 0;
    return m;
  }
  if (name == "lopsided3") {
    // u=0, w=1, a=2, b=3: triangle a-b-w with u hanging off a. u meets the
    // cell in one edge and w in two, so there is no constant inner degree.
    return {"lopsided3", 4, {0, 1}, {{0, 2}, {2, 3}, {1, 3}, {1, 2}}, 0};
  }
  throw InputError("unknown built-in model '" + std::string(name) + "'");
}

}  // namespace selfsim
