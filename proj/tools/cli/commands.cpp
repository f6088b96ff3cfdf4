#include "cli/commands.hpp"

#include <chrono>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "resiclose/closeness.hpp"
#include "resiclose/distance.hpp"
#include "resiclose/edge_list.hpp"
#include "resiclose/error.hpp"
#include "resiclose/formulas.hpp"
#include "resiclose/generators.hpp"
#include "resiclose/transform.hpp"
#include "resiclose/verify.hpp"

namespace resiclose::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidFamilyParams:
    case ErrorKind::ParseError:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::SelfLoop:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::OutOfValidityDomain:
      return kExitUsage;
    default:
      return kExitPrecondition;
  }
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

// "lo..hi" for verify ranges.
ParamRange parse_param_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = static_cast<std::int64_t>(parse_u64(text, "range"));
    return {v, v};
  }
  return {static_cast<std::int64_t>(parse_u64(text.substr(0, dots), "range")),
          static_cast<std::int64_t>(parse_u64(text.substr(dots + 2), "range"))};
}

// "lo..hi:step" (step defaults to 1) for scaling sweeps.
std::vector<std::size_t> parse_sweep(const std::string& text) {
  std::string body = text;
  std::size_t step = 1;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    body = text.substr(0, colon);
    step = parse_u64(text.substr(colon + 1), "step");
    if (step == 0) throw UsageError("step must be positive");
  }
  const ParamRange r = parse_param_range(body);
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  std::vector<std::size_t> out;
  for (auto n = r.lo; n <= r.hi; n += static_cast<std::int64_t>(step)) {
    out.push_back(static_cast<std::size_t>(n));
  }
  return out;
}

struct FamilyArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  std::string p = "1/2";
  std::uint64_t seed = 0;

  void attach(CLI::App* app, bool required, bool with_n = true) {
    auto* opt = app->add_option("--family", family,
                                "path|cycle|star|complete|wheel|complete-bipartite|"
                                "random-tree|random-regular|erdos-renyi");
    if (required) opt->required();
    if (with_n) {
      app->add_option("--n", n, "vertex count (leaves for star, rim for wheel, first part)");
    }
    app->add_option("--m", m, "second part size for complete-bipartite");
    app->add_option("--r", r, "degree for random-regular");
    app->add_option("--p", p, "edge probability for erdos-renyi as num/den")->capture_default_str();
    app->add_option("--seed", seed, "seed for random families")->capture_default_str();
  }

  FamilySpec spec() const {
    const auto f = parse_family(family);
    if (!f) throw UsageError("unknown family '" + family + "'");
    FamilySpec s{*f, n, m, r};
    s.seed = seed;
    const auto slash = p.find('/');
    if (slash == std::string::npos) {
      s.p_num = parse_u64(p, "probability");
      s.p_den = 1;
    } else {
      s.p_num = parse_u64(p.substr(0, slash), "probability");
      s.p_den = parse_u64(p.substr(slash + 1), "probability");
    }
    return s;
  }
};

struct SourceArgs {
  std::string input;
  FamilyArgs family;
  std::vector<std::string> transforms;

  void attach(CLI::App* app) {
    app->add_option("--input,-i", input, "edge-list file");
    family.attach(app, false);
    app->add_option("--transform", transforms, "middle|line, applied left to right")
        ->check(CLI::IsMember({"middle", "line"}));
  }

  Graph load() const {
    if (!input.empty() && !family.family.empty()) {
      throw UsageError("give either --input or --family, not both");
    }
    if (input.empty() && family.family.empty()) throw UsageError("need --input or --family");
    Graph g = input.empty() ? generate(family.spec()) : load_edge_list(input);
    for (const auto& t : transforms) g = t == "middle" ? middle_graph(g) : line_graph(g);
    return g;
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

// --- generate --------------------------------------------------------------

struct GenerateCmd {
  FamilyArgs family;
  std::string output;

  void attach(CLI::App* app) {
    family.attach(app, true);
    app->add_option("--output,-o", output, "edge-list file (standard output if omitted)");
  }

  int run(std::ostream& out) const {
    const Graph g = generate(family.spec());
    if (output.empty()) {
      write_edge_list(g, out);
    } else {
      save_edge_list(g, output);
      out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    }
    return kExitOk;
  }
};

// --- transform -------------------------------------------------------------

struct TransformCmd {
  SourceArgs source;
  std::string output;

  void attach(CLI::App* app) {
    source.attach(app);
    app->add_option("--output,-o", output, "edge-list file (standard output if omitted)");
  }

  int run(std::ostream& out) const {
    emit(write_edge_list(source.load()), output, out);
    return kExitOk;
  }
};

// --- analyze ---------------------------------------------------------------

struct AnalyzeCmd {
  SourceArgs source;
  std::vector<std::string> metrics{"closeness"};
  std::string format = "json";
  std::string mode = "delete";
  std::string output;
  std::size_t threads = 0;

  void attach(CLI::App* app) {
    source.attach(app);
    app->add_option("--metrics", metrics, "closeness and/or residual")
        ->check(CLI::IsMember({"closeness", "residual"}))
        ->capture_default_str();
    app->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app->add_option("--removal-mode", mode, "delete (BFS on G-v) or isolate (Floyd-Warshall)")
        ->check(CLI::IsMember({"delete", "isolate"}))
        ->capture_default_str();
    app->add_option("--threads", threads, "worker threads, 0 = auto");
    app->add_option("--output,-o", output, "report file (standard output if omitted)");
  }

  int run(std::ostream& out) const {
    const Graph g = source.load();
    const DistanceMatrix d = all_pairs_bfs(g, {threads});

    AnalyzeResult result;
    result.graph = &g;
    result.connected = is_connected(g);
    result.stats = distance_stats(d);
    result.closeness = closeness_profile(d);
    if (std::find(metrics.begin(), metrics.end(), "residual") != metrics.end()) {
      const RemovalMode m = mode == "isolate" ? RemovalMode::Isolate : RemovalMode::Delete;
      result.removal = residual_closeness(g, {m, {threads}});
    }

    std::ostringstream text;
    if (format == "csv") {
      write_analyze_csv(result, text);
    } else {
      text << analyze_json(result).dump(2) << '\n';
    }
    emit(text.str(), output, out);
    return kExitOk;
  }
};

// --- verify ----------------------------------------------------------------

struct VerifyCmd {
  std::string suite = "all";
  std::string id;
  std::string range;
  double tolerance = kDefaultTolerance;
  std::string format = "table";
  std::uint64_t seed = SuiteOptions{}.seed;
  std::size_t threads = 0;
  std::string output;

  void attach(CLI::App* app) {
    app->add_option("--suite", suite)
        ->check(CLI::IsMember({"formulas", "structure", "bounds", "all"}))
        ->capture_default_str();
    app->add_option("--id", id, "restrict to one formula id (e.g. CM_Wheel) or bound id");
    app->add_option("--range", range, "parameter range lo..hi for formula suites");
    app->add_option("--tolerance", tolerance)->capture_default_str();
    app->add_option("--format", format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    app->add_option("--seed", seed, "base seed for random corpora")->capture_default_str();
    app->add_option("--threads", threads, "worker threads, 0 = auto");
    app->add_option("--output,-o", output, "report file (standard output if omitted)");
  }

  int run(std::ostream& out) const {
    std::optional<FormulaId> formula;
    std::optional<BoundId> bound;
    if (!id.empty()) {
      formula = parse_formula_id(id);
      bound = parse_bound_id(id);
      if (!formula && !bound) throw UsageError("unknown id '" + id + "'");
    }
    std::optional<ParamRange> params;
    if (!range.empty()) params = parse_param_range(range);

    SuiteOptions options;
    options.tolerance = tolerance;
    options.seed = seed;
    options.execution.threads = threads;

    VerifyOutcome outcome;
    outcome.suite = suite;
    outcome.tolerance = tolerance;
    const bool all = suite == "all";
    const bool by_bound = bound.has_value();
    if ((all || suite == "formulas") && !by_bound) {
      outcome.formulas = run_formula_suite(options, formula, params);
    }
    if ((all || suite == "structure") && !by_bound) {
      if (!formula || describe(*formula).quantity == Quantity::ResidualCloseness) {
        if (!formula || describe(*formula).transform == BaseTransform::Middle) {
          outcome.structure = run_structure_suite(options, formula, params);
        }
      }
    }
    if ((all || suite == "bounds") && !formula) {
      outcome.bounds = run_bound_suite(options, bound);
    }

    std::ostringstream text;
    if (format == "json") {
      text << verify_json(outcome).dump(2) << '\n';
    } else {
      write_verify_table(outcome, text);
    }
    emit(text.str(), output, out);
    return outcome.failed_count() == 0 ? kExitOk : kExitCheckFailed;
  }
};

// --- formulas --------------------------------------------------------------

struct FormulasCmd {
  std::string format = "table";

  void attach(CLI::App* app) {
    app->add_option("--format", format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  }

  int run(std::ostream& out) const {
    if (format == "json") {
      out << catalog_json().dump(2) << '\n';
    } else {
      write_catalog_table(out);
    }
    return kExitOk;
  }
};

// --- scaling ---------------------------------------------------------------

struct ScalingCmd {
  FamilyArgs family;
  std::string sweep;
  std::string method = "floyd-warshall";
  std::string output;

  void attach(CLI::App* app) {
    family.attach(app, true, /*with_n=*/false);
    app->add_option("--n", sweep, "base sizes lo..hi:step")->required();
    app->add_option("--method", method, "all-pairs routine used by every stage")
        ->check(CLI::IsMember({"floyd-warshall", "bfs"}))
        ->capture_default_str();
    app->add_option("--output,-o", output, "CSV file (standard output if omitted)");
  }

  int run(std::ostream& out) const {
    using Clock = std::chrono::steady_clock;
    auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
    const bool fw = method == "floyd-warshall";
    const ExecutionOptions single{.threads = 1};

    std::ostringstream csv;
    csv << "n,vertices_of_middle_graph,t_allpairs_ms,t_closeness_ms,t_residual_ms\n";
    for (std::size_t n : parse_sweep(sweep)) {
      FamilySpec spec = family.spec();
      spec.n = n;
      const Graph g = middle_graph(generate(spec));

      // Each stage starts from the graph, as the closeness and residual
      // stages do in practice.
      auto all_pairs = [&] { return fw ? floyd_warshall(g) : all_pairs_bfs(g, single); };
      const auto t0 = Clock::now();
      const DistanceMatrix d = all_pairs();
      const auto t1 = Clock::now();
      const ClosenessProfile closeness = closeness_profile(all_pairs());
      const auto t2 = Clock::now();
      const RemovalProfile removal =
          residual_closeness(g, {fw ? RemovalMode::Isolate : RemovalMode::Delete, single});
      const auto t3 = Clock::now();
      if (d.size() != g.vertex_count() || closeness.total < removal.r_value) {
        throw std::logic_error("scaling: inconsistent stage results");
      }

      char line[160];
      std::snprintf(line, sizeof line, "%zu,%zu,%.3f,%.3f,%.3f\n", n, g.vertex_count(),
                    ms(t1 - t0), ms(t2 - t1), ms(t3 - t2));
      csv << line;
    }
    emit(csv.str(), output, out);
    return kExitOk;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closeness and vertex residual closeness of graphs, middle graphs and line graphs"};
  app.name("resiclose");
  app.require_subcommand(1);

  GenerateCmd generate_cmd;
  TransformCmd transform_cmd;
  AnalyzeCmd analyze_cmd;
  VerifyCmd verify_cmd;
  FormulasCmd formulas_cmd;
  ScalingCmd scaling_cmd;

  auto* gen = app.add_subcommand("generate", "write a family member as an edge list");
  generate_cmd.attach(gen);
  auto* tr = app.add_subcommand("transform", "apply middle/line transforms and write an edge list");
  transform_cmd.attach(tr);
  auto* an = app.add_subcommand("analyze", "closeness and residual closeness report");
  analyze_cmd.attach(an);
  auto* ve = app.add_subcommand("verify", "check closed forms and general bounds by brute force");
  verify_cmd.attach(ve);
  auto* fo = app.add_subcommand("formulas", "list the closed-form catalog");
  formulas_cmd.attach(fo);
  auto* sc = app.add_subcommand("scaling", "time the all-pairs, closeness and residual stages");
  scaling_cmd.attach(sc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return generate_cmd.run(out);
    if (tr->parsed()) return transform_cmd.run(out);
    if (an->parsed()) return analyze_cmd.run(out);
    if (ve->parsed()) return verify_cmd.run(out);
    if (fo->parsed()) return formulas_cmd.run(out);
    if (sc->parsed()) return scaling_cmd.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"resiclose"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace resiclose::cli
