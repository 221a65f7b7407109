#pragma once

#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include "selfsim/graph.hpp"

namespace selfsim {

/// The substitution rule. Every slot is an ordered θ-tuple; position j of a
/// slot receives boundary[j] of the copy glued into it.
struct CellModel {
  std::string name;
  std::size_t vertex_count = 0;
  std::vector<VertexId> boundary;
  std::vector<std::vector<VertexId>> slots;
  std::size_t anchor_slot = 0;

  std::size_t theta() const { return boundary.size(); }
  std::size_t mu() const { return slots.size(); }

  /// Union of the slot cliques. Throws InputError if ids are out of range.
  FiniteGraph graph() const;
  /// Vertices not on the boundary, ascending.
  std::vector<VertexId> interior() const;

  bool operator==(const CellModel&) const = default;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<VertexId> witness;  // offending vertices, or slot indices for slot checks
  std::string detail;
};

struct ValidationReport {
  std::string model;
  std::vector<AxiomCheck> checks;
  bool pass = true;
  /// Common boundary distance when h2_level1 passed.
  std::optional<std::uint32_t> nu;

  const AxiomCheck* find(std::string_view axiom) const;
};

struct Parameters {
  std::size_t theta = 0;
  std::size_t mu = 0;
  std::uint32_t nu = 0;
  std::uint32_t lambda = 0;
  std::uint32_t rho = 0;
  std::size_t delta = 0;
  std::optional<std::size_t> b;  // constant inner degree
  std::optional<std::size_t> c;
  bool c_stabilized = false;
  std::optional<std::size_t> max_degree;  // M
  bool max_degree_stabilized = false;
  double kappa_tilde = 0.0;
  int kappa = 0;
  double dim_predicted = 0.0;

  // Filled by deep_parameters: the same quantities measured on a deep cell
  // with distances taken in the generated graph rather than the model.
  std::optional<std::uint32_t> nu_deep;
  std::optional<std::uint32_t> lambda_deep;
  int depth = 1;
};

/// Checks structure, F1, F2, edge partition, slot overlap, connectivity of
/// the model and of its cell interior, and equal boundary distances.
ValidationReport validate(const CellModel& m);

/// Level-1 parameters. Throws InputError if validation fails.
Parameters model_parameters(const CellModel& m);

/// Least integer k with ν^(k+1) >= ν + 3ρ, i.e. ⌈log(ν+3ρ)/log ν − 1⌉ computed exactly.
int kappa_for(std::uint32_t nu, std::uint32_t rho);

/// line, sierpinski, tree4, diamond_open, diamond_fixed, lopsided3.
CellModel builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

}  // namespace selfsim
