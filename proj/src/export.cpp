#include <sstream>

#include "json.hpp"

#include "selfsim/io.hpp"

namespace selfsim {

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "edges") return ExportFormat::Edges;
  if (name == "json") return ExportFormat::Json;
  throw InputError("unknown export format '" + std::string(name) + "' (dot, edges, json)");
}

std::string export_graph(const HierarchicalGraph& hg, ExportFormat format) {
  const auto edges = hg.graph().edges();
  std::ostringstream out;
  switch (format) {
    case ExportFormat::Edges:
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out << '\n';
        out << edges[i].first << ' ' << edges[i].second;
      }
      break;
    case ExportFormat::Dot:
      out << "graph G" << hg.depth() << " {\n";
      for (VertexId v = 0; v < hg.vertex_count(); ++v) {
        out << "  " << v << " [level=" << hg.level(v) << "];\n";
      }
      for (const auto& [u, v] : edges) out << "  " << u << " -- " << v << ";\n";
      out << "}\n";
      break;
    case ExportFormat::Json: {
      nlohmann::ordered_json doc;
      doc["depth"] = hg.depth();
      doc["vertices"] = hg.vertex_count();
      doc["boundary"] = std::vector<VertexId>(hg.boundary().begin(), hg.boundary().end());
      doc["levels"] = std::vector<int>(hg.levels().begin(), hg.levels().end());
      auto list = nlohmann::ordered_json::array();
      for (const auto& [u, v] : edges) list.push_back({u, v});
      doc["edges"] = std::move(list);
      out << doc.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string write_growth_csv(const GrowthCurve& curve) {
  std::ostringstream out;
  out << "r,volume\n";
  for (std::size_t r = 0; r < curve.volumes.size(); ++r) out << r << ',' << curve.volumes[r] << '\n';
  return out.str();
}

std::string write_growth_csv(std::span<const GlobalGrowth> series) {
  std::ostringstream out;
  out << "r,lower,upper\n";
  for (const auto& g : series) out << g.r << ',' << g.lower << ',' << g.upper << '\n';
  return out.str();
}

}  // namespace selfsim
