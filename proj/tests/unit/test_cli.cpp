#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli/commands.hpp"

using nlohmann::json;
namespace cli = resiclose::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(std::string_view name) {
  return std::filesystem::temp_directory_path() / ("resiclose_cli_" + std::string(name));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("generate: documented examples") {
  const auto path = invoke({"generate", "--family", "path", "--n", "5"});
  CHECK(path.code == cli::kExitOk);
  CHECK(path.out == "5 4\n0 1\n1 2\n2 3\n3 4\n");

  const auto wheel = invoke({"generate", "--family", "wheel", "--n", "5"});
  CHECK(wheel.out.rfind("6 10\n", 0) == 0);

  const auto a = scratch("rr_a.el");
  const auto b = scratch("rr_b.el");
  const auto first = invoke({"generate", "--family", "random-regular", "--n", "8", "--r", "3",
                             "--seed", "42", "-o", a.string()});
  invoke({"generate", "--family", "random-regular", "--n", "8", "--r", "3", "--seed", "42", "-o",
          b.string()});
  CHECK(first.code == 0);
  CHECK(first.out == "8 12\n");
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("generate: invalid parameters exit 2") {
  CHECK(invoke({"generate", "--family", "cycle", "--n", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"generate", "--family", "random-regular", "--n", "5", "--r", "3"}).code ==
        cli::kExitUsage);
  CHECK(invoke({"generate", "--family", "hypercube", "--n", "3"}).code == cli::kExitUsage);
  CHECK(invoke({"no-such-command"}).code == cli::kExitUsage);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("analyze: documented examples") {
  const auto mc4 = invoke({"analyze", "--family", "cycle", "--n", "4", "--transform", "middle",
                           "--metrics", "closeness"});
  REQUIRE(mc4.code == 0);
  const json report = json::parse(mc4.out);
  CHECK(report["total_closeness"].get<double>() == 19.5);
  CHECK(report["schema"] == 1);
  CHECK(report["n"] == 8);
  CHECK(report["m"] == 12);
  CHECK_FALSE(report.contains("residual"));

  const auto k5 = invoke({"analyze", "--family", "complete", "--n", "5", "--metrics", "residual"});
  const json r = json::parse(k5.out);
  CHECK(r["residual"].get<double>() == 6.0);
  CHECK(r["argmin"].size() == 5);
  CHECK(r["ck"].size() == 5);

  const auto file = scratch("two_components.el");
  std::ofstream(file) << "4 2\n0 1\n2 3\n";
  const auto split = invoke({"analyze", "--input", file.string(), "--metrics", "closeness"});
  REQUIRE(split.code == 0);
  const json s = json::parse(split.out);
  CHECK(s["connected"] == false);
  CHECK(s["total_closeness"].get<double>() == 2.0);
  CHECK(s["diameter"].is_null());
  std::filesystem::remove(file);
}

TEST_CASE("analyze: key order is fixed") {
  const auto res = invoke({"analyze", "--family", "path", "--n", "4", "--metrics", "closeness",
                           "residual"});
  const auto report = nlohmann::ordered_json::parse(res.out);
  std::vector<std::string> keys;
  for (const auto& [key, value] : report.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"schema", "n", "m", "connected", "diameter", "radius",
                                         "per_vertex_closeness", "total_closeness", "ck",
                                         "residual", "argmin"});
}

TEST_CASE("analyze: csv, transforms compose and errors map to exit codes") {
  const auto csv = invoke({"analyze", "--family", "path", "--n", "3", "--format", "csv",
                           "--metrics", "closeness", "residual"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("vertex,kind,closeness,ck,in_argmin\n", 0) == 0);
  CHECK(csv.out.find("\n1,,1,0,1\n") != std::string::npos);

  // L(M(P_3)) has one vertex per edge of M(P_3).
  const auto composed = invoke({"transform", "--family", "path", "--n", "3", "--transform",
                                "middle", "--transform", "line"});
  CHECK(composed.out.rfind("5 ", 0) == 0);

  const auto bad = scratch("bad.el");
  std::ofstream(bad) << "0 1\n1 x\n";
  CHECK(invoke({"analyze", "--input", bad.string()}).code == cli::kExitUsage);
  std::filesystem::remove(bad);
  CHECK(invoke({"analyze", "--family", "path", "--n", "1", "--metrics", "residual"}).code ==
        cli::kExitPrecondition);
}

TEST_CASE("analyze: identical invocations are byte-identical") {
  const std::vector<std::string> args = {"analyze", "--family", "erdos-renyi", "--n", "9",
                                         "--p", "1/2", "--seed", "3", "--transform", "middle",
                                         "--metrics", "closeness", "residual", "--threads", "3"};
  CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("verify: documented examples") {
  const auto wheel = invoke({"verify", "--suite", "formulas", "--id", "CM_Wheel", "--range",
                             "5..10", "--tolerance", "1e-9", "--format", "json"});
  CHECK(wheel.code == 0);
  const json w = json::parse(wheel.out);
  REQUIRE(w["formulas"].size() == 1);
  CHECK(w["formulas"][0]["cases"].size() == 6);
  CHECK(w["summary"]["failed"] == 0);

  const auto upper = invoke({"verify", "--suite", "bounds", "--id", "connected-upper", "--format",
                             "json"});
  CHECK(upper.code == 0);
  const json u = json::parse(upper.out);
  CHECK_FALSE(u["flagged"].empty());

  CHECK(invoke({"verify", "--suite", "formulas", "--id", "CM_Wheel", "--range", "3..6"}).code ==
        cli::kExitUsage);
  CHECK(invoke({"verify", "--suite", "formulas", "--id", "nonsense"}).code == cli::kExitUsage);
}

TEST_CASE("formulas: catalog") {
  const auto cat = invoke({"formulas", "--format", "json"});
  CHECK(cat.code == 0);
  const json c = json::parse(cat.out);
  CHECK(c.size() == 20);
  const auto table = invoke({"formulas"});
  CHECK(table.out.find("RM_Wheel") != std::string::npos);
}

TEST_CASE("scaling: shape of the CSV") {
  const auto res = invoke({"scaling", "--family", "path", "--n", "10..20:10"});
  REQUIRE(res.code == 0);
  std::istringstream lines(res.out);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "n,vertices_of_middle_graph,t_allpairs_ms,t_closeness_ms,t_residual_ms");
  std::size_t rows = 0;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == 2);
  CHECK(invoke({"scaling", "--family", "path", "--n", "20..10:5"}).code == cli::kExitUsage);
}
