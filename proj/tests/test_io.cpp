#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "selfsim/cli.hpp"
#include "selfsim/io.hpp"

using namespace selfsim;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "ssgraph");
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string error_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "selfsim_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST(ModelFile, RoundTripsEveryBuiltin) {
  for (const auto& name : builtin_names()) {
    auto m = builtin(name);
    auto text = serialize_model(m);
    EXPECT_EQ(parse_model(text), m) << name;
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(serialize_model(parse_model(text)), text);
  }
}

TEST(ModelFile, Defaults) {
  auto m = parse_model(R"({"vertices": 3, "boundary": [0, 2], "slots": [[0, 1], [1, 2]]})");
  EXPECT_EQ(m.name, "model");
  EXPECT_EQ(m.anchor_slot, 0u);
  EXPECT_EQ(m, (CellModel{"model", 3, {0, 2}, {{0, 1}, {1, 2}}, 0}));
}

TEST(ModelFile, Diagnostics) {
  EXPECT_EQ(error_of("{\n  \"vertices\": 3,\n  \"boundary\": [0, 2],\n  \"slots\": [[0, 1], [1, 5]]\n}"),
            "model: line 4, column 25: slots[1][1]: id 5 out of range (vertices = 3)");
  EXPECT_NE(error_of(R"({"vertices": 3, "boundary": [0, 2], "slots": [[0, 1], [1, 2]], "color": 1})")
                .find("color: unknown field"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"vertices": 3, "boundary": [0, 2]})").find("slots"), std::string::npos);
  EXPECT_NE(error_of(R"({"vertices": 3, "boundary": [0, 0], "slots": [[0, 1], [1, 2]]})")
                .find("boundary[1]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"vertices": 3, "boundary": [0, 2], "slots": [[0, 1], [1]]})").find("slots[1]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"vertices": "3", "boundary": [0, 2], "slots": [[0, 1], [1, 2]]})")
                .find("vertices"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"vertices": 3, "boundary": [0, 2], "slots": [[0, 1], [1, 2]], "anchor_slot": 2})")
                .find("anchor_slot"),
            std::string::npos);
  auto syntax = error_of(R"({"vertices": 3,)");
  EXPECT_EQ(syntax.rfind("model: syntax error", 0), 0u);
  EXPECT_NE(syntax.find("line 1, column 16"), std::string::npos);
}

TEST(Export, EdgeListHasNoTrailingNewline) {
  auto hg = generate(builtin("line"), 1);
  EXPECT_EQ(export_graph(hg, ExportFormat::Edges), "0 1\n1 2");
}

TEST(Export, Dot) {
  auto hg = generate(builtin("line"), 1);
  EXPECT_EQ(export_graph(hg, ExportFormat::Dot),
            "graph G1 {\n  0 [level=1];\n  1 [level=0];\n  2 [level=1];\n  0 -- 1;\n  1 -- 2;\n}\n");
}

TEST(Export, JsonCarriesLevelsAndEdges) {
  auto hg = generate(builtin("sierpinski"), 2);
  auto doc = nlohmann::json::parse(export_graph(hg, ExportFormat::Json));
  EXPECT_EQ(doc["vertices"], 15);
  EXPECT_EQ(doc["edges"].size(), 27u);
  EXPECT_EQ(doc["boundary"], nlohmann::json({0, 1, 2}));
  EXPECT_EQ(doc["levels"][0], 2);
}

TEST(Export, FormatNames) {
  EXPECT_EQ(parse_export_format("dot"), ExportFormat::Dot);
  EXPECT_THROW(parse_export_format("svg"), InputError);
}

TEST(Csv, GrowthCurve) {
  GrowthCurve c{0, 0, {4}};
  EXPECT_EQ(write_growth_csv(c), "r,volume\n0,4\n");
  std::vector<GlobalGrowth> series{{1, 6, 8, 3, 0, 0}};
  EXPECT_EQ(write_growth_csv(series), "r,lower,upper\n1,6,8\n");
}

TEST(Cli, ValidateBuiltinAndStdin) {
  auto ok = cli({"validate", "sierpinski"});
  EXPECT_EQ(ok.code, 0);
  auto doc = nlohmann::json::parse(ok.out);
  EXPECT_EQ(doc["command"], "validate");
  EXPECT_EQ(doc["result"]["pass"], true);

  auto bad = cli({"validate", "-"}, R"({"vertices": 3, "boundary": [0, 2], "slots": [[0, 2], [0, 1], [1, 2]]})");
  EXPECT_EQ(bad.code, 1);

  auto broken = cli({"validate", "-"}, "{");
  EXPECT_EQ(broken.code, 2);
  EXPECT_NE(broken.err.find("syntax error"), std::string::npos);
}

TEST(Cli, ModelFromFile) {
  auto path = scratch("tree4.json");
  std::ofstream(path) << serialize_model(builtin("tree4"));
  auto r = cli({"params", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["lambda"], 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"generate", "line"}).code, 2);
  EXPECT_EQ(cli({"generate", "nowhere", "--level", "2"}).code, 2);
  EXPECT_EQ(cli({"generate", "line", "--level", "2", "--format", "svg"}).code, 2);
  auto help = cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("Usage"), std::string::npos);
}

TEST(Cli, CapExceededExitsTwo) {
  auto r = cli({"--edge-cap", "10", "generate", "sierpinski", "--level", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("edge cap"), std::string::npos);
}

TEST(Cli, GenerateFormats) {
  EXPECT_EQ(cli({"generate", "line", "--level", "1", "--format", "edges"}).out, "0 1\n1 2\n");
  auto summary = nlohmann::json::parse(cli({"generate", "sierpinski", "--level", "2"}).out);
  EXPECT_EQ(summary["result"]["vertices"], 15);
  EXPECT_EQ(summary["result"]["edges"], 27);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(cli({"check", "sierpinski", "--level", "4"}).code, 0);
  EXPECT_EQ(cli({"check", "lopsided3", "--level", "3", "--theorem", "boundary"}).code, 0);
  // the diameter bounds do not hold for this model, see README
  EXPECT_EQ(cli({"check", "lopsided3", "--level", "3", "--theorem", "diameter"}).code, 1);
  EXPECT_EQ(cli({"check", "line", "--theorem", "nonsense"}).code, 2);
}

TEST(Cli, GrowthCsvAndDim) {
  auto path = scratch("growth.csv");
  auto r = cli({"growth", "line", "--level", "4", "--csv", path.string()});
  EXPECT_EQ(r.code, 0);
  auto text = slurp(path);
  EXPECT_EQ(text.rfind("r,volume\n0,2\n1,6\n", 0), 0u);

  auto global = scratch("global.csv");
  EXPECT_EQ(cli({"growth", "line", "--level", "4", "--global", "--csv", global.string()}).code, 0);
  EXPECT_EQ(slurp(global).rfind("r,lower,upper\n0,2,2\n", 0), 0u);

  EXPECT_EQ(cli({"dim", "line", "--level", "10"}).code, 0);
  EXPECT_EQ(cli({"dim", "line", "--level", "7", "--tol", "0.01"}).code, 1);
}

TEST(Cli, ExportWritesFiles) {
  auto model = scratch("model.json");
  EXPECT_EQ(cli({"export", "diamond_open", "--out", model.string()}).code, 0);
  EXPECT_EQ(parse_model(slurp(model)), builtin("diamond_open"));
  auto dot = scratch("g.dot");
  EXPECT_EQ(cli({"export", "line", "--level", "2", "--format", "dot", "--out", dot.string()}).code, 0);
  EXPECT_EQ(slurp(dot).rfind("graph G2 {", 0), 0u);
}

TEST(Cli, Deterministic) {
  std::vector<std::vector<std::string>> runs{
      {"check", "tree4", "--level", "4"},
      {"params", "sierpinski", "--depth", "4"},
      {"dim", "sierpinski", "--level", "6"},
      {"generate", "diamond_fixed", "--level", "3", "--format", "dot"},
  };
  for (const auto& args : runs) EXPECT_EQ(cli(args).out, cli(args).out);
}
