#include "selfsim/serialize.hpp"

namespace selfsim {

namespace {

Json number(const Number& n) {
  return std::visit([](auto v) { return Json(v); }, n);
}

template <typename T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const ValidationReport& r) {
  Json doc;
  doc["model"] = r.model;
  doc["pass"] = r.pass;
  doc["nu"] = optional_value(r.nu);
  auto checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry;
    entry["axiom"] = c.axiom;
    entry["pass"] = c.pass;
    entry["witness"] = c.witness;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

Json to_json(const TheoremReport& r) {
  Json doc;
  doc["theorem"] = r.theorem;
  doc["model"] = r.model;
  doc["depth"] = {r.depth_min, r.depth_max};
  doc["verdict"] = std::string(to_string(r.verdict));
  auto rows = Json::array();
  for (const auto& m : r.measurements) {
    Json row;
    row["n"] = m.n;
    row["quantity"] = m.quantity;
    row["relation"] = std::string(to_string(m.relation));
    row["predicted"] = number(m.predicted);
    row["measured"] = number(m.measured);
    row["holds"] = m.holds;
    rows.push_back(std::move(row));
  }
  doc["measurements"] = std::move(rows);
  doc["witnesses"] = r.witnesses;
  doc["notes"] = r.notes;
  return doc;
}

Json to_json(const Parameters& p) {
  Json doc;
  doc["theta"] = p.theta;
  doc["mu"] = p.mu;
  doc["nu"] = p.nu;
  doc["lambda"] = p.lambda;
  doc["rho"] = p.rho;
  doc["delta"] = p.delta;
  doc["b"] = optional_value(p.b);
  doc["c"] = optional_value(p.c);
  doc["c_stabilized"] = p.c_stabilized;
  doc["M"] = optional_value(p.max_degree);
  doc["M_stabilized"] = p.max_degree_stabilized;
  doc["kappa_tilde"] = p.kappa_tilde;
  doc["kappa"] = p.kappa;
  doc["dim_predicted"] = p.dim_predicted;
  doc["nu_deep"] = optional_value(p.nu_deep);
  doc["lambda_deep"] = optional_value(p.lambda_deep);
  doc["depth"] = p.depth;
  return doc;
}

Json to_json(const OriginInfo& o) {
  Json doc;
  doc["stabilizing_power"] = optional_value(o.stabilizing_power);
  doc["depth"] = o.depth;
  if (const auto* v = std::get_if<OriginVertex>(&o.kind)) {
    doc["kind"] = "origin_vertex";
    doc["vertex"] = v->vertex;
  } else if (const auto* c = std::get_if<OriginCell>(&o.kind)) {
    doc["kind"] = "origin_cell";
    doc["cell"] = {{"level", c->level},
                   {"index", c->index},
                   {"slot_path", c->slot_path},
                   {"boundary", c->boundary}};
  } else {
    doc["kind"] = "unresolved";
  }
  doc["evidence"] = o.evidence;
  return doc;
}

Json to_json(const DimensionEstimate& d) {
  Json doc;
  doc["dim_predicted"] = d.dim_predicted;
  doc["slope_lower"] = d.slope_lower;
  doc["slope_upper"] = d.slope_upper;
  doc["residual_lower"] = d.residual_lower;
  doc["residual_upper"] = d.residual_upper;
  doc["deviation"] = d.deviation;
  doc["fit_range"] = {d.r_min, d.r_max};
  doc["window_slopes_lower"] = d.window_lower;
  doc["window_slopes_upper"] = d.window_upper;
  auto pts = Json::array();
  for (const auto& p : d.points) {
    pts.push_back({{"r", p.r},
                   {"lower", p.lower},
                   {"upper", p.upper},
                   {"admissible", p.admissible},
                   {"lower_center", p.lower_center},
                   {"upper_center", p.upper_center}});
  }
  doc["points"] = std::move(pts);
  doc["bracketing"] = "lower >= true inf over all centers; upper <= true sup";
  return doc;
}

Json to_json(const DoublingRatio& d) {
  return Json{{"ratio", d.ratio}, {"center", d.center}, {"r", d.r}, {"V_r", d.v_r},
              {"V_2r", d.v_2r}};
}

Json report_document(const std::string& command, const std::string& model, Json body,
                     const Caps& caps) {
  Json doc;
  doc["tool"] = {{"name", "ssgraph"}, {"version", kToolVersion}};
  doc["command"] = command;
  doc["model"] = model;
  doc["caps"] = {{"edge_cap", caps.edge_cap},
                 {"diameter_vertex_cap", caps.diameter_vertex_cap},
                 {"k_max", caps.k_max}};
  doc["result"] = std::move(body);
  return doc;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace selfsim
