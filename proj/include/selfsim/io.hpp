#pragma once

#include <span>
#include <string>
#include <string_view>

#include "selfsim/cell_model.hpp"
#include "selfsim/growth.hpp"
#include "selfsim/substitution.hpp"

namespace selfsim {

/// Model document: a JSON object with `name` (string, optional), `vertices`
/// (integer), `boundary` (array of ids), `slots` (array of id arrays, each of
/// boundary length) and `anchor_slot` (integer, default 0). Unknown fields,
/// syntax errors, wrong arities, out-of-range and repeated ids throw
/// InputError naming the field and its line/column.
CellModel parse_model(std::string_view text);

/// Canonical document; parse_model(serialize_model(m)) == m.
std::string serialize_model(const CellModel& m);

enum class ExportFormat { Dot, Edges, Json };
ExportFormat parse_export_format(std::string_view name);

/// dot: undirected graph with a `level` attribute per vertex. edges: "u v"
/// per line, ascending, joined by LF with no trailing newline. json: levels,
/// boundary and edge list.
std::string export_graph(const HierarchicalGraph& hg, ExportFormat format);

/// "r,volume" rows, LF terminated.
std::string write_growth_csv(const GrowthCurve& curve);
/// "r,lower,upper" rows, LF terminated.
std::string write_growth_csv(std::span<const GlobalGrowth> series);

}  // namespace selfsim
