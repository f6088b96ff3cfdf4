#include "cli/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include "resiclose/formulas.hpp"

namespace resiclose::cli {
namespace {

using Json = nlohmann::ordered_json;

Json number(double v) { return round12(v); }

Json vertex_list(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

Json record_json(const BoundAuditRecord& r) {
  return Json{
      {"bound", bound_name(r.bound)},
      {"graph", r.graph},
      {"lhs", number(r.lhs)},
      {"rhs", number(r.rhs)},
      {"relation", r.relation == Relation::Equal ? "=" : "<="},
      {"slack", number(r.slack)},
      {"holds", r.holds},
      {"known_conflict", is_known_conflict(r.bound)},
  };
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

double round12(double value) { return std::strtod(format12(value).c_str(), nullptr); }

std::string format12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json analyze_json(const AnalyzeResult& result) {
  const Graph& g = *result.graph;
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["connected"] = result.connected;
  j["diameter"] = result.stats ? Json(result.stats->diameter) : Json(nullptr);
  j["radius"] = result.stats ? Json(result.stats->radius) : Json(nullptr);
  Json per_vertex = Json::array();
  for (double c : result.closeness.per_vertex) per_vertex.push_back(number(c));
  j["per_vertex_closeness"] = std::move(per_vertex);
  j["total_closeness"] = number(result.closeness.total);
  if (result.removal) {
    Json ck = Json::array();
    for (double c : result.removal->ck) ck.push_back(number(c));
    j["ck"] = std::move(ck);
    j["residual"] = number(result.removal->r_value);
    j["argmin"] = vertex_list(result.removal->argmin);
  }
  return j;
}

void write_analyze_csv(const AnalyzeResult& result, std::ostream& out) {
  const Graph& g = *result.graph;
  out << "vertex,kind,closeness";
  if (result.removal) out << ",ck,in_argmin";
  out << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v << ',' << (g.has_kinds() ? to_string(g.kinds()[v]) : "") << ','
        << format12(result.closeness.per_vertex[v]);
    if (result.removal) {
      const auto& argmin = result.removal->argmin;
      const bool hit = std::find(argmin.begin(), argmin.end(), v) != argmin.end();
      out << ',' << format12(result.removal->ck[v]) << ',' << (hit ? 1 : 0);
    }
    out << '\n';
  }
}

std::size_t VerifyOutcome::case_count() const {
  std::size_t n = bounds.size();
  for (const auto& r : formulas) n += r.cases.size();
  for (const auto& r : structure) n += r.cases.size();
  return n;
}

std::size_t VerifyOutcome::passed_count() const {
  std::size_t n = 0;
  for (const auto& r : formulas) n += r.passed;
  for (const auto& r : structure) n += r.passed;
  for (const auto& r : bounds) n += r.holds ? 1 : 0;
  return n;
}

std::size_t VerifyOutcome::failed_count() const {
  std::size_t n = 0;
  for (const auto& r : formulas) n += r.failed;
  for (const auto& r : structure) n += r.failed;
  for (const auto& r : bounds) n += (!r.holds && !is_known_conflict(r.bound)) ? 1 : 0;
  return n;
}

std::vector<const BoundAuditRecord*> VerifyOutcome::flagged() const {
  std::vector<const BoundAuditRecord*> out;
  for (const auto& r : bounds) {
    if (!r.holds && is_known_conflict(r.bound)) out.push_back(&r);
  }
  return out;
}

Json verify_json(const VerifyOutcome& outcome) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = outcome.suite;
  j["tolerance"] = outcome.tolerance;

  Json formulas = Json::array();
  for (const auto& report : outcome.formulas) {
    const auto& entry = describe(report.id);
    Json cases = Json::array();
    for (const auto& c : report.cases) {
      cases.push_back(Json{{"case", c.case_id},
                           {"params", c.params},
                           {"formula", number(c.formula_value)},
                           {"oracle", number(c.oracle_value)},
                           {"abs_diff", c.abs_diff},
                           {"pass", c.pass}});
    }
    formulas.push_back(Json{{"id", entry.name},
                            {"statement", entry.statement},
                            {"validity", entry.validity},
                            {"passed", report.passed},
                            {"failed", report.failed},
                            {"cases", std::move(cases)}});
  }
  j["formulas"] = std::move(formulas);

  Json structure = Json::array();
  for (const auto& report : outcome.structure) {
    Json cases = Json::array();
    for (const auto& c : report.cases) {
      cases.push_back(Json{{"case", c.case_id},
                           {"params", c.params},
                           {"r_value", number(c.r_value)},
                           {"argmin", vertex_list(c.argmin)},
                           {"claimed", vertex_list(c.claimed)},
                           {"claimed_hit", c.claimed_hit},
                           {"argmin_edge_vertices_only", c.argmin_edge_vertices_only},
                           {"pass", c.pass}});
    }
    structure.push_back(Json{{"id", describe(report.id).name},
                             {"passed", report.passed},
                             {"failed", report.failed},
                             {"cases", std::move(cases)}});
  }
  j["structure"] = std::move(structure);

  Json bounds = Json::array();
  for (const auto& r : outcome.bounds) bounds.push_back(record_json(r));
  j["bounds"] = std::move(bounds);

  Json flagged = Json::array();
  for (const auto* r : outcome.flagged()) flagged.push_back(record_json(*r));
  j["flagged"] = std::move(flagged);

  j["summary"] = Json{{"cases", outcome.case_count()},
                      {"passed", outcome.passed_count()},
                      {"failed", outcome.failed_count()},
                      {"flagged", outcome.flagged().size()}};
  return j;
}

void write_verify_table(const VerifyOutcome& outcome, std::ostream& out) {
  if (!outcome.formulas.empty()) {
    out << pad("case", 22) << pad("formula", 20) << pad("oracle", 20) << pad("|diff|", 14)
        << "result\n";
    for (const auto& report : outcome.formulas) {
      for (const auto& c : report.cases) {
        char diff[32];
        std::snprintf(diff, sizeof diff, "%.3g", c.abs_diff);
        out << pad(c.case_id, 22) << pad(format12(c.formula_value), 20)
            << pad(format12(c.oracle_value), 20) << pad(diff, 14) << (c.pass ? "pass" : "FAIL")
            << '\n';
      }
    }
    out << '\n';
  }
  if (!outcome.structure.empty()) {
    out << pad("case", 22) << pad("R", 16) << pad("argmin", 30) << pad("edge-only", 11)
        << "claimed class\n";
    for (const auto& report : outcome.structure) {
      for (const auto& c : report.cases) {
        std::string argmin;
        for (Vertex v : c.argmin) argmin += (argmin.empty() ? "" : " ") + std::to_string(v);
        if (argmin.size() > 28) argmin = argmin.substr(0, 25) + "...";
        out << pad(c.case_id, 22) << pad(format12(c.r_value), 16) << pad(argmin, 30)
            << pad(c.argmin_edge_vertices_only ? "yes" : "no", 11)
            << (c.claimed_hit ? "hit" : "MISS") << '\n';
      }
    }
    out << '\n';
  }
  if (!outcome.bounds.empty()) {
    out << pad("bound", 23) << pad("graph", 40) << pad("lhs", 16) << pad("rhs", 16)
        << pad("slack", 16) << "result\n";
    for (const auto& r : outcome.bounds) {
      std::string result = r.holds ? "holds" : (is_known_conflict(r.bound) ? "flagged" : "FAIL");
      out << pad(std::string(bound_name(r.bound)), 23) << pad(r.graph, 40) << pad(format12(r.lhs), 16)
          << pad(format12(r.rhs), 16) << pad(format12(r.slack), 16) << result << '\n';
    }
    out << '\n';
  }
  out << "cases " << outcome.case_count() << ", passed " << outcome.passed_count() << ", failed "
      << outcome.failed_count() << ", flagged " << outcome.flagged().size() << '\n';
}

Json catalog_json() {
  Json out = Json::array();
  for (const auto& entry : list_formulas()) {
    out.push_back(Json{{"id", entry.name},
                       {"arity", entry.arity},
                       {"statement", entry.statement},
                       {"validity", entry.validity}});
  }
  return out;
}

void write_catalog_table(std::ostream& out) {
  out << pad("id", 10) << pad("validity", 12) << "statement\n";
  for (const auto& entry : list_formulas()) {
    // validity strings may contain multi-byte characters; pad by hand.
    std::string validity(entry.validity);
    const bool wide = validity.find("≥") != std::string::npos;
    out << pad(std::string(entry.name), 10) << pad(validity, wide ? 14 : 12) << entry.statement
        << '\n';
  }
}

}  // namespace resiclose::cli
