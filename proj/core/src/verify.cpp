#include "resiclose/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "resiclose/error.hpp"
#include "resiclose/generators.hpp"
#include "resiclose/transform.hpp"

namespace resiclose {
namespace {

constexpr ExecutionOptions kSequential{.threads = 1};

constexpr std::array<std::pair<BoundId, std::string_view>, kBoundCount> kBoundNames{{
    {BoundId::ConnectedLower, "connected-lower"},
    {BoundId::ConnectedLowerProof, "connected-lower-proof"},
    {BoundId::ConnectedUpper, "connected-upper"},
    {BoundId::RegularLower, "regular-lower"},
    {BoundId::RegularUpper, "regular-upper"},
    {BoundId::TreeIdentity, "tree-identity"},
    {BoundId::StarFreeTree, "starfree-tree"},
    {BoundId::EdgeRemoval, "edge-removal"},
}};

std::string case_label(FormulaId id, std::span<const std::int64_t> params) {
  std::string out(describe(id).name);
  out += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

std::vector<std::vector<std::int64_t>> expand(FormulaId id, ParamRange range) {
  const auto& entry = describe(id);
  if (range.lo > range.hi) {
    throw Error(ErrorKind::OutOfValidityDomain, std::string(entry.name) + ": empty range " +
                                                    std::to_string(range.lo) + ".." +
                                                    std::to_string(range.hi));
  }
  std::vector<std::vector<std::int64_t>> tuples;
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    if (entry.arity == 1) {
      tuples.push_back({n});
    } else {
      for (std::int64_t m = range.lo; m <= range.hi; ++m) tuples.push_back({n, m});
    }
  }
  for (const auto& t : tuples) {
    if (!in_domain(id, t)) {
      throw Error(ErrorKind::OutOfValidityDomain,
                  case_label(id, t) + " outside " + std::string(entry.validity));
    }
  }
  return tuples;
}

Graph measured_graph(FormulaId id, std::span<const std::int64_t> params) {
  Graph base = generate(base_family(id, params));
  switch (describe(id).transform) {
    case BaseTransform::None: return base;
    case BaseTransform::Line: return line_graph(base);
    case BaseTransform::Middle: return middle_graph(base);
  }
  return base;
}

std::vector<Vertex> claimed_class(FormulaId id, const Graph& middle, std::int64_t n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < middle.vertex_count(); ++v) {
    const auto* ev = std::get_if<EdgeVertex>(&middle.kinds()[v]);
    if (!ev) continue;
    switch (id) {
      case FormulaId::RM_Path: {
        // Path edges are (i, i+1); the central one (two for odd n) splits
        // M(P_n) most evenly.
        const auto i = static_cast<std::int64_t>(ev->a);
        const bool central = (n % 2 == 0) ? i == n / 2 - 1 : (i == (n - 3) / 2 || i == (n - 1) / 2);
        if (central) out.push_back(v);
        break;
      }
      case FormulaId::RM_Wheel:
        if (ev->a == 0) out.push_back(v);
        break;
      default:
        out.push_back(v);
        break;
    }
  }
  return out;
}

double middle_closeness(const Graph& g) { return total_closeness(middle_graph(g)); }

void require_connected(const Graph& g, std::string_view label) {
  if (g.vertex_count() == 0 || !is_connected(g)) {
    throw Error(ErrorKind::Disconnected, std::string(label) + " is not connected");
  }
}

}  // namespace

ParamRange default_range(FormulaId id) {
  switch (id) {
    case FormulaId::C_Kn:
    case FormulaId::C_Star:
    case FormulaId::C_Path: return {2, 20};
    case FormulaId::C_Cycle: return {3, 20};
    case FormulaId::R_Kn: return {3, 12};
    case FormulaId::CL_Cycle:
    case FormulaId::CL_Path:
    case FormulaId::CL_Star:
    case FormulaId::CL_Kn: return {3, 10};
    case FormulaId::CM_Path: return {2, 16};
    case FormulaId::CM_Cycle: return {3, 16};
    case FormulaId::CM_Star: return {2, 14};
    case FormulaId::CM_Kn: return {3, 10};
    case FormulaId::CM_Wheel: return {5, 12};
    case FormulaId::CM_Knm: return {2, 7};
    case FormulaId::RM_Path: return {2, 14};
    case FormulaId::RM_Cycle: return {3, 12};
    case FormulaId::RM_Star: return {2, 12};
    case FormulaId::RM_Wheel: return {6, 10};
    case FormulaId::RM_Knm: return {2, 6};
  }
  return {0, -1};
}

double oracle_value(FormulaId id, std::span<const std::int64_t> params,
                    const ExecutionOptions& execution) {
  const Graph g = measured_graph(id, params);
  if (describe(id).quantity == Quantity::Closeness) return total_closeness(g);
  return residual_closeness(g, {RemovalMode::Delete, execution}).r_value;
}

VerificationReport verify_family_formula(FormulaId id, ParamRange range, double tolerance,
                                         const ExecutionOptions& execution) {
  const auto tuples = expand(id, range);
  VerificationReport report;
  report.id = id;
  report.tolerance = tolerance;
  report.cases.resize(tuples.size());
  parallel_for(tuples.size(), execution, [&](std::size_t i) {
    VerificationCase& c = report.cases[i];
    c.case_id = case_label(id, tuples[i]);
    c.params = tuples[i];
    c.formula_value = eval_formula(id, tuples[i]);
    c.oracle_value = oracle_value(id, tuples[i], kSequential);
    c.abs_diff = std::abs(c.formula_value - c.oracle_value);
    c.pass = c.abs_diff <= tolerance;
  });
  for (const auto& c : report.cases) (c.pass ? report.passed : report.failed) += 1;
  return report;
}

StructureReport verify_residual_structure(FormulaId id, ParamRange range,
                                          const ExecutionOptions& execution) {
  const auto& entry = describe(id);
  if (entry.quantity != Quantity::ResidualCloseness || entry.transform != BaseTransform::Middle) {
    throw Error(ErrorKind::OutOfValidityDomain,
                std::string(entry.name) + " makes no claim about middle-graph removals");
  }
  const auto tuples = expand(id, range);
  StructureReport report;
  report.id = id;
  report.cases.resize(tuples.size());
  parallel_for(tuples.size(), execution, [&](std::size_t i) {
    StructureCase& c = report.cases[i];
    c.case_id = case_label(id, tuples[i]);
    c.params = tuples[i];
    const Graph middle = measured_graph(id, tuples[i]);
    const RemovalProfile profile = residual_closeness(middle, {RemovalMode::Delete, kSequential});
    c.r_value = profile.r_value;
    c.argmin = profile.argmin;
    c.claimed = claimed_class(id, middle, tuples[i][0]);
    c.claimed_hit = std::any_of(c.argmin.begin(), c.argmin.end(), [&](Vertex v) {
      return std::find(c.claimed.begin(), c.claimed.end(), v) != c.claimed.end();
    });
    c.argmin_edge_vertices_only = std::all_of(c.argmin.begin(), c.argmin.end(), [&](Vertex v) {
      return is_edge_vertex(middle.kinds()[v]);
    });
    c.pass = c.claimed_hit;
  });
  for (const auto& c : report.cases) (c.pass ? report.passed : report.failed) += 1;
  return report;
}

std::string_view bound_name(BoundId id) noexcept {
  for (const auto& [b, name] : kBoundNames) {
    if (b == id) return name;
  }
  return "unknown";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const auto& [b, known] : kBoundNames) {
    if (known == name) return b;
  }
  return std::nullopt;
}

bool is_known_conflict(BoundId id) noexcept {
  return id == BoundId::ConnectedUpper || id == BoundId::StarFreeTree;
}

BoundAuditRecord make_record(BoundId bound, std::string graph, double lhs, double rhs,
                             Relation relation, double tolerance) {
  BoundAuditRecord r{bound, std::move(graph), lhs, rhs, relation, rhs - lhs, false};
  r.holds = relation == Relation::Equal ? std::abs(r.slack) <= tolerance : r.slack >= -tolerance;
  return r;
}

std::vector<BoundAuditRecord> audit_connected_bounds(const Graph& g, std::string_view label,
                                                     double tolerance) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorKind::TooSmall, std::string(label) + " needs at least 2 vertices");
  require_connected(g, label);

  const double half = total_closeness(g) / 2.0;
  const double cm = middle_closeness(g);
  const double nn = static_cast<double>(n);
  const int k = static_cast<int>(n);
  const double stated = half + 6.0 * nn - 14.0 + std::ldexp(1.0, 3 - k);
  const double proof = half + 6.0 * nn - 14.0 + std::ldexp(1.0, 4 - k);
  const double upper = half + (3.0 * nn * nn + 5.0 * nn - 14.0) / 8.0;

  const std::string name(label);
  return {
      make_record(BoundId::ConnectedLower, name, stated, cm, Relation::LessEqual, tolerance),
      make_record(BoundId::ConnectedLowerProof, name, proof, cm, Relation::LessEqual, tolerance),
      make_record(BoundId::ConnectedUpper, name, cm, upper, Relation::LessEqual, tolerance),
  };
}

std::vector<BoundAuditRecord> audit_regular_bounds(const Graph& g, std::size_t r,
                                                   std::string_view label, double tolerance) {
  require_connected(g, label);
  const auto degree = regular_degree(g);
  if (!degree || *degree != r || r < 2) {
    throw Error(ErrorKind::NotRegular,
                std::string(label) + " is not " + std::to_string(r) + "-regular with r >= 2");
  }
  const std::size_t n = g.vertex_count();
  const double nn = static_cast<double>(n);
  const double rr = static_cast<double>(r);
  const double cm = middle_closeness(g);
  const double lower = eval_formula(FormulaId::CM_Cycle, {static_cast<std::int64_t>(n)});
  const double upper =
      total_closeness(g) / 2.0 + nn * rr * (4.0 * nn + 4.0 * rr + nn * rr + 2.0) / 16.0;

  const std::string name(label);
  return {
      make_record(BoundId::RegularLower, name, lower, cm, Relation::LessEqual, tolerance),
      make_record(BoundId::RegularUpper, name, cm, upper, Relation::LessEqual, tolerance),
  };
}

BoundAuditRecord audit_tree_identity(const Graph& t, std::string_view label, double tolerance) {
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, std::string(label) + " is not a tree");
  const double lhs = middle_closeness(t);
  const double rhs = 2.5 * total_closeness(t) + total_closeness(line_graph(t));
  return make_record(BoundId::TreeIdentity, std::string(label), lhs, rhs, Relation::Equal,
                     tolerance);
}

BoundAuditRecord audit_starfree_tree_bound(const Graph& t, std::string_view label,
                                           double tolerance) {
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, std::string(label) + " is not a tree");
  const std::size_t n = t.vertex_count();
  if (n <= 3) throw Error(ErrorKind::TooSmall, std::string(label) + " needs more than 3 vertices");
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) == n - 1) {
      throw Error(ErrorKind::IsAStar, std::string(label) + " is a star (centre " +
                                          std::to_string(v) + ")");
    }
  }
  return make_record(BoundId::StarFreeTree, std::string(label), middle_closeness(t),
                     3.5 * total_closeness(t), Relation::LessEqual, tolerance);
}

std::vector<BoundAuditRecord> audit_edge_removal_bound(const Graph& g, std::string_view label,
                                                       double tolerance,
                                                       const ExecutionOptions& execution) {
  const std::vector<Edge> edges = g.edges();
  if (edges.empty()) throw Error(ErrorKind::NoEdges, std::string(label) + " has no edges");
  const double residual =
      residual_closeness(middle_graph(g), {RemovalMode::Delete, execution}).r_value;
  std::vector<BoundAuditRecord> records(edges.size());
  parallel_for(edges.size(), execution, [&](std::size_t i) {
    const Edge e = edges[i];
    const double rhs = middle_closeness(remove_edge(g, e.a, e.b));
    records[i] = make_record(
        BoundId::EdgeRemoval,
        std::string(label) + " - e(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")",
        residual, rhs, Relation::LessEqual, tolerance);
  });
  return records;
}

std::vector<LabeledGraph> family_corpus(std::size_t limit) {
  std::vector<LabeledGraph> out;
  auto add_while = [&](auto make_spec, std::size_t first) {
    for (std::size_t n = first;; ++n) {
      const FamilySpec spec = make_spec(n);
      Graph g = generate(spec);
      if (g.vertex_count() + g.edge_count() > limit) break;
      out.push_back({spec.describe(), std::move(g)});
    }
  };
  add_while(FamilySpec::path, 2);
  add_while(FamilySpec::cycle, 3);
  add_while(FamilySpec::star, 1);
  add_while(FamilySpec::complete, 2);
  add_while(FamilySpec::wheel, 3);
  for (std::size_t n = 1; n + 1 + n <= limit; ++n) {
    for (std::size_t m = 1;; ++m) {
      if (n + m + n * m > limit) break;
      const FamilySpec spec = FamilySpec::complete_bipartite(n, m);
      out.push_back({spec.describe(), generate(spec)});
    }
  }
  return out;
}

std::vector<LabeledGraph> random_tree_corpus(std::size_t count, std::size_t min_n,
                                             std::size_t max_n, std::uint64_t seed) {
  std::vector<LabeledGraph> out;
  out.reserve(count);
  const std::size_t span = max_n - min_n + 1;
  for (std::size_t i = 0; i < count; ++i) {
    const FamilySpec spec = FamilySpec::random_tree(min_n + i % span, seed + i);
    out.push_back({spec.describe(), generate(spec)});
  }
  return out;
}

std::vector<LabeledGraph> erdos_renyi_corpus(std::size_t count, std::size_t n,
                                             std::uint64_t p_num, std::uint64_t p_den,
                                             std::uint64_t seed, bool connected) {
  std::vector<LabeledGraph> out;
  out.reserve(count);
  // Connected draws may skip seeds; space the starting seeds so graphs never
  // share one.
  constexpr std::uint64_t kStride = 1000;
  for (std::size_t i = 0; i < count; ++i) {
    if (!connected) {
      const FamilySpec spec = FamilySpec::erdos_renyi(n, p_num, p_den, seed + i);
      out.push_back({spec.describe(), generate(spec)});
      continue;
    }
    std::uint64_t used = 0;
    Graph g = connected_erdos_renyi_graph(n, p_num, p_den, seed + i * kStride, &used);
    out.push_back({FamilySpec::erdos_renyi(n, p_num, p_den, used).describe(), std::move(g)});
  }
  return out;
}

std::vector<VerificationReport> run_formula_suite(const SuiteOptions& options,
                                                  std::optional<FormulaId> only,
                                                  std::optional<ParamRange> range) {
  std::vector<VerificationReport> reports;
  for (const auto& entry : list_formulas()) {
    if (only && *only != entry.id) continue;
    reports.push_back(verify_family_formula(entry.id, range.value_or(default_range(entry.id)),
                                            options.tolerance, options.execution));
  }
  return reports;
}

std::vector<StructureReport> run_structure_suite(const SuiteOptions& options,
                                                 std::optional<FormulaId> only,
                                                 std::optional<ParamRange> range) {
  std::vector<StructureReport> reports;
  for (const auto& entry : list_formulas()) {
    if (entry.quantity != Quantity::ResidualCloseness || entry.transform != BaseTransform::Middle) {
      continue;
    }
    if (only && *only != entry.id) continue;
    ParamRange r = default_range(entry.id);
    if (entry.id == FormulaId::RM_Path) r = {2, 12};
    if (entry.id == FormulaId::RM_Cycle || entry.id == FormulaId::RM_Star) r.hi = 10;
    reports.push_back(
        verify_residual_structure(entry.id, range.value_or(r), options.execution));
  }
  return reports;
}

std::vector<BoundAuditRecord> run_bound_suite(const SuiteOptions& options,
                                              std::optional<BoundId> only) {
  const double tol = options.tolerance;
  auto wanted = [&](std::initializer_list<BoundId> ids) {
    if (!only) return true;
    return std::find(ids.begin(), ids.end(), *only) != ids.end();
  };

  const auto families = family_corpus(options.family_limit);
  const auto trees = random_tree_corpus(options.random_trees, 3, 15, options.seed);
  const auto connected =
      erdos_renyi_corpus(options.random_connected, 8, 1, 2, options.seed, /*connected=*/true);

  // Each task yields a batch of records; batches are concatenated in task
  // order so the report is independent of scheduling.
  std::vector<std::function<std::vector<BoundAuditRecord>()>> tasks;

  if (wanted({BoundId::ConnectedLower, BoundId::ConnectedLowerProof, BoundId::ConnectedUpper})) {
    for (const auto* corpus : {&families, &trees, &connected}) {
      for (const auto& item : *corpus) {
        tasks.push_back([&item, tol] { return audit_connected_bounds(item.graph, item.label, tol); });
      }
    }
  }

  if (wanted({BoundId::RegularLower, BoundId::RegularUpper})) {
    std::vector<LabeledGraph> regular;
    for (std::size_t n = 3; n <= 8; ++n) {
      regular.push_back({FamilySpec::complete(n).describe(), complete_graph(n)});
    }
    for (std::size_t n = 3; n <= 12; ++n) {
      regular.push_back({FamilySpec::cycle(n).describe(), cycle_graph(n)});
    }
    const std::array<std::pair<std::size_t, std::size_t>, 4> shapes{{{8, 3}, {10, 3}, {10, 4}, {12, 5}}};
    for (const auto& [n, r] : shapes) {
      for (std::uint64_t k = 0; k < 5; ++k) {
        const FamilySpec spec = FamilySpec::random_regular(n, r, options.seed + k);
        Graph g = generate(spec);
        if (is_connected(g)) regular.push_back({spec.describe(), std::move(g)});
      }
    }
    for (auto& item : regular) {
      tasks.push_back([item = std::move(item), tol] {
        return audit_regular_bounds(item.graph, *regular_degree(item.graph), item.label, tol);
      });
    }
  }

  std::vector<const LabeledGraph*> all_trees;
  for (const auto& item : families) {
    if (is_tree(item.graph)) all_trees.push_back(&item);
  }
  for (const auto& item : trees) all_trees.push_back(&item);

  if (wanted({BoundId::TreeIdentity})) {
    for (const auto* item : all_trees) {
      tasks.push_back([item, tol] {
        return std::vector{audit_tree_identity(item->graph, item->label, tol)};
      });
    }
  }

  if (wanted({BoundId::StarFreeTree})) {
    for (const auto* item : all_trees) {
      const Graph& t = item->graph;
      const std::size_t n = t.vertex_count();
      bool star = false;
      for (Vertex v = 0; v < n; ++v) star = star || t.degree(v) + 1 == n;
      if (n <= 3 || star) continue;
      tasks.push_back([item, tol] {
        return std::vector{audit_starfree_tree_bound(item->graph, item->label, tol)};
      });
    }
  }

  if (wanted({BoundId::EdgeRemoval})) {
    for (const auto* corpus : {&families, &connected}) {
      for (const auto& item : *corpus) {
        tasks.push_back([&item, tol] {
          return audit_edge_removal_bound(item.graph, item.label, tol, kSequential);
        });
      }
    }
  }

  std::vector<std::vector<BoundAuditRecord>> batches(tasks.size());
  parallel_for(tasks.size(), options.execution, [&](std::size_t i) { batches[i] = tasks[i](); });

  std::vector<BoundAuditRecord> records;
  for (auto& batch : batches) {
    for (auto& r : batch) {
      if (!only || r.bound == *only) records.push_back(std::move(r));
    }
  }
  return records;
}

}  // namespace resiclose
