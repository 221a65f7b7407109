#include "selfsim/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "selfsim/growth.hpp"
#include "selfsim/invariants.hpp"
#include "selfsim/io.hpp"
#include "selfsim/serialize.hpp"

namespace selfsim {

namespace {

CellModel load_model(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream text;
    text << in.rdbuf();
    return parse_model(text.str());
  }
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream file(arg, std::ios::binary);
    std::ostringstream text;
    text << file.rdbuf();
    return parse_model(text.str());
  }
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return builtin(arg);
  throw InputError("'" + arg + "' is neither a model file nor a built-in model");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw InputError("failed writing '" + path + "'");
}

Json summary(const HierarchicalGraph& hg) {
  std::map<int, std::size_t> levels;
  for (int l : hg.levels()) ++levels[l];
  Json hist = Json::array();
  for (const auto& [l, count] : levels) hist.push_back({l, count});
  Json cells = Json::array();
  for (int k = 1; k <= hg.depth(); ++k) cells.push_back(hg.cell_count(k));
  return Json{{"depth", hg.depth()},
              {"vertices", hg.vertex_count()},
              {"edges", hg.graph().edge_count()},
              {"boundary", std::vector<VertexId>(hg.boundary().begin(), hg.boundary().end())},
              {"cells_per_level", cells},
              {"level_histogram", hist}};
}

TheoremReport origin_report(const CellModel& m, const OriginInfo& o, int depth) {
  TheoremReport r;
  r.theorem = "origin";
  r.model = m.name;
  r.depth_min = depth;
  r.depth_max = o.depth;
  r.notes = o.evidence;
  if (o.resolved()) {
    r.info(o.depth, "stabilizing power", std::int64_t{*o.stabilizing_power});
    r.info(o.depth, "origin vertex", std::int64_t{o.has_origin_vertex()});
  } else {
    r.inapplicable("dichotomy unresolved within the power cap");
  }
  return r;
}

struct Context {
  std::istream& in;
  std::ostream& out;
  Caps caps;
  GenerateOptions gen() const { return {caps.edge_cap}; }
};

int cmd_validate(Context& cx, const std::string& model) {
  const CellModel m = load_model(model, cx.in);
  const ValidationReport r = validate(m);
  cx.out << render(report_document("validate", m.name, to_json(r), cx.caps));
  return r.pass ? 0 : 1;
}

int cmd_generate(Context& cx, const std::string& model, int level, const std::string& format) {
  const CellModel m = load_model(model, cx.in);
  if (format != "summary") {
    const ExportFormat f = parse_export_format(format);
    cx.out << export_graph(generate(m, level, cx.gen()), f);
    if (f == ExportFormat::Edges) cx.out << '\n';
    return 0;
  }
  const HierarchicalGraph hg = generate(m, level, cx.gen());
  cx.out << render(report_document("generate", m.name, summary(hg), cx.caps));
  return 0;
}

int cmd_params(Context& cx, const std::string& model, int depth) {
  const CellModel m = load_model(model, cx.in);
  const Parameters p = depth >= 3 ? deep_parameters(m, depth, cx.gen()) : model_parameters(m);
  cx.out << render(report_document("params", m.name, to_json(p), cx.caps));
  return 0;
}

int cmd_check(Context& cx, const std::string& model, int level, const std::string& theorem) {
  static const std::vector<std::string> all{"boundary", "volume",   "diameter", "geometry",
                                            "origin",   "selfsim",  "sandwich", "cells"};
  std::vector<std::string> which;
  if (theorem == "all") {
    which = all;
  } else if (std::find(all.begin(), all.end(), theorem) != all.end()) {
    which = {theorem};
  } else {
    throw InputError("unknown theorem '" + theorem + "'");
  }
  if (level < 1) throw InputError("--level must be at least 1");
  const CellModel m = load_model(model, cx.in);
  const int deep = std::max(level, 3);
  const GenerateOptions g = cx.gen();

  Json body;
  Json reports = Json::array();
  bool failed = false;
  auto add = [&](const TheoremReport& r) {
    failed = failed || r.failed();
    reports.push_back(to_json(r));
  };
  for (const auto& t : which) {
    if (t == "boundary") {
      add(check_edge_boundary(m, level, g));
    } else if (t == "volume") {
      add(check_cell_volume(m, level, g));
    } else if (t == "diameter") {
      add(check_diameters(m, level, g));
    } else if (t == "geometry") {
      const auto bg = check_bounded_geometry(m, deep, g);
      add(bg.report);
      const auto cls = classify_geometry(m, deep, g);
      add(cls.report);
      body["classification"] = std::string(to_string(cls.kind));
    } else if (t == "origin") {
      const int depth = std::max(level, 2);
      const OriginInfo o = detect_origin(m, depth, cx.caps.k_max, g);
      add(origin_report(m, o, depth));
      body["origin"] = to_json(o);
    } else if (t == "selfsim") {
      add(verify_reduction_isomorphism(m, std::max(level, 2), g).report);
    } else if (t == "sandwich") {
      add(check_growth_sandwich(m, level, 1, level, g));
    } else if (t == "cells") {
      add(check_cells_lemma(m, deep, g));
    }
  }
  body["pass"] = !failed;
  body["reports"] = std::move(reports);
  cx.out << render(report_document("check", m.name, std::move(body), cx.caps));
  return failed ? 1 : 0;
}

int cmd_growth(Context& cx, const std::string& model, int level, const std::string& center,
               const std::string& csv, bool global) {
  const CellModel m = load_model(model, cx.in);
  const HierarchicalGraph hg = generate(m, level, cx.gen());
  const auto safe = safe_radii(hg);
  std::string text;
  Json body;
  if (global) {
    const std::uint32_t reach = *std::max_element(safe.begin(), safe.end());
    std::vector<std::uint32_t> radii;
    for (std::uint32_t r = 0; r <= reach; ++r) radii.push_back(r);
    const auto series = global_growth_series(hg, radii);
    text = write_growth_csv(series);
    body["radii"] = series.size();
  } else {
    VertexId x = 0;
    if (center == "auto") {
      x = static_cast<VertexId>(std::max_element(safe.begin(), safe.end()) - safe.begin());
    } else {
      std::size_t used = 0;
      unsigned long id = 0;
      try {
        id = std::stoul(center, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != center.size() || id >= hg.vertex_count()) {
        throw InputError("--center must be 'auto' or a vertex id below " +
                         std::to_string(hg.vertex_count()));
      }
      x = static_cast<VertexId>(id);
    }
    const GrowthCurve curve = growth_function(hg, x);
    text = write_growth_csv(curve);
    body["center"] = curve.center;
    body["safe_radius"] = curve.safe_radius;
  }
  if (csv.empty()) {
    cx.out << text;
    return 0;
  }
  write_file(csv, text);
  body["csv"] = csv;
  cx.out << render(report_document("growth", m.name, std::move(body), cx.caps));
  return 0;
}

int cmd_dim(Context& cx, const std::string& model, int level, double tol) {
  const CellModel m = load_model(model, cx.in);
  const Parameters p = model_parameters(m);
  const HierarchicalGraph hg = generate(m, level, cx.gen());
  const DimensionEstimate est = estimate_dimensions(hg, p.mu, p.nu);
  Json body = to_json(est);
  const bool bounded = p.b && *p.b == p.theta - 1;
  body["tolerance"] = tol;
  body["within_tolerance"] = est.deviation <= tol;
  if (!bounded) body["note"] = "bounded geometry not established by b = theta-1; comparison advisory";
  cx.out << render(report_document("dim", m.name, std::move(body), cx.caps));
  return est.deviation <= tol ? 0 : 1;
}

int cmd_export(Context& cx, const std::string& model, int level, const std::string& format,
               const std::string& path) {
  const CellModel m = load_model(model, cx.in);
  std::string text;
  if (format == "model") {
    text = serialize_model(m);
  } else {
    text = export_graph(generate(m, level, cx.gen()), parse_export_format(format));
  }
  if (path.empty()) {
    cx.out << text;
  } else {
    write_file(path, text);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite approximations of self-similar graphs and checks of their invariants",
               "ssgraph"};
  app.require_subcommand(1);
  Context cx{in, out, {}};
  app.add_option("--edge-cap", cx.caps.edge_cap, "Maximum number of edges to generate");

  std::string model, format = "summary", export_format = "model", theorem = "all", center = "auto", csv, path;
  int level = 1, depth = 1;
  double tol = 0.1;
  bool global = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of a cell model");
  validate_cmd->add_option("model", model, "Model file, built-in name, or - for stdin")->required();

  auto* generate_cmd = app.add_subcommand("generate", "Build G_n");
  generate_cmd->add_option("model", model)->required();
  generate_cmd->add_option("--level", level)->required();
  generate_cmd->add_option("--format", format, "summary, edges, dot or json");

  auto* params_cmd = app.add_subcommand("params", "Model parameters");
  params_cmd->add_option("model", model)->required();
  params_cmd->add_option("--depth", depth, "Refine b, c, M on G_depth (depth >= 3)");

  auto* check_cmd = app.add_subcommand("check", "Run theorem checks");
  check_cmd->add_option("model", model)->required();
  check_cmd->add_option("--level", level)->default_val(5);
  check_cmd->add_option("--theorem", theorem,
                        "all, boundary, volume, diameter, geometry, origin, selfsim, sandwich, cells");

  auto* growth_cmd = app.add_subcommand("growth", "Ball growth curve");
  growth_cmd->add_option("model", model)->required();
  growth_cmd->add_option("--level", level)->required();
  growth_cmd->add_option("--center", center, "auto or a vertex id");
  growth_cmd->add_option("--csv", csv, "Write CSV here instead of stdout");
  growth_cmd->add_flag("--global", global, "Lower/upper series over every radius");

  auto* dim_cmd = app.add_subcommand("dim", "Estimate growth dimensions");
  dim_cmd->add_option("model", model)->required();
  dim_cmd->add_option("--level", level)->required();
  dim_cmd->add_option("--tol", tol);

  auto* export_cmd = app.add_subcommand("export", "Write a model document or a graph");
  export_cmd->add_option("model", model)->required();
  export_cmd->add_option("--level", level);
  export_cmd->add_option("--format", export_format, "model, dot, edges or json");
  export_cmd->add_option("--out", path);

  std::vector<char*> argv;
  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty()) storage.push_back("ssgraph");
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(cx, model);
    if (generate_cmd->parsed()) return cmd_generate(cx, model, level, format);
    if (params_cmd->parsed()) return cmd_params(cx, model, depth);
    if (check_cmd->parsed()) return cmd_check(cx, model, level, theorem);
    if (growth_cmd->parsed()) return cmd_growth(cx, model, level, center, csv, global);
    if (dim_cmd->parsed()) return cmd_dim(cx, model, level, tol);
    if (export_cmd->parsed()) return cmd_export(cx, model, level, export_format, path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace selfsim
