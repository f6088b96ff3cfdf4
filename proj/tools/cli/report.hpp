#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "resiclose/closeness.hpp"
#include "resiclose/distance.hpp"
#include "resiclose/graph.hpp"
#include "resiclose/verify.hpp"

namespace resiclose::cli {

inline constexpr int kSchemaVersion = 1;

// Numbers are reported with 12 significant digits.
double round12(double value);
std::string format12(double value);

struct AnalyzeResult {
  const Graph* graph = nullptr;
  bool connected = false;
  std::optional<DistanceStats> stats;
  ClosenessProfile closeness;
  std::optional<RemovalProfile> removal;
};

nlohmann::ordered_json analyze_json(const AnalyzeResult& result);
void write_analyze_csv(const AnalyzeResult& result, std::ostream& out);

struct VerifyOutcome {
  std::string suite;
  double tolerance = kDefaultTolerance;
  std::vector<VerificationReport> formulas;
  std::vector<StructureReport> structure;
  std::vector<BoundAuditRecord> bounds;

  std::size_t case_count() const;
  std::size_t passed_count() const;
  // Failures that are not known conflicts.
  std::size_t failed_count() const;
  std::vector<const BoundAuditRecord*> flagged() const;
};

nlohmann::ordered_json verify_json(const VerifyOutcome& outcome);
void write_verify_table(const VerifyOutcome& outcome, std::ostream& out);

nlohmann::ordered_json catalog_json();
void write_catalog_table(std::ostream& out);

}  // namespace resiclose::cli
