#pragma once

#include <string>

#include "json.hpp"
#include "selfsim/cell_model.hpp"
#include "selfsim/growth.hpp"
#include "selfsim/invariants.hpp"
#include "selfsim/report.hpp"
#include "selfsim/substitution.hpp"

namespace selfsim {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

struct Caps {
  std::uint64_t edge_cap = GenerateOptions{}.edge_cap;
  std::size_t diameter_vertex_cap = DiameterOptions{}.vertex_cap;
  int k_max = 6;
};

Json to_json(const ValidationReport& r);
Json to_json(const TheoremReport& r);
Json to_json(const Parameters& p);
Json to_json(const OriginInfo& o);
Json to_json(const DimensionEstimate& d);
Json to_json(const DoublingRatio& d);

/// Wraps a body with the command name, tool version and caps.
Json report_document(const std::string& command, const std::string& model, Json body,
                     const Caps& caps);

/// Two-space indented, LF terminated.
std::string render(const Json& doc);

}  // namespace selfsim
