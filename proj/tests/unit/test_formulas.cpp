#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "resiclose/error.hpp"
#include "resiclose/formulas.hpp"
#include "resiclose/generators.hpp"
#include "resiclose/transform.hpp"

using namespace resiclose;
using F = FormulaId;

namespace {

constexpr double kTol = 1e-9;

bool close(double a, double b) { return std::abs(a - b) <= kTol; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

// Reference value built only from the brute-force oracle.
double brute_value(FormulaId id, std::span<const std::int64_t> params) {
  const auto& d = describe(id);
  Graph g = generate(base_family(id, params));
  if (d.transform == BaseTransform::Middle) g = middle_graph(g);
  if (d.transform == BaseTransform::Line) g = line_graph(g);
  if (d.quantity == Quantity::Closeness) return resiclose::testing::brute_total_closeness(g);
  const auto sums = resiclose::testing::brute_removal_sums(g);
  return *std::min_element(sums.begin(), sums.end());
}

}  // namespace

TEST_CASE("eval_formula: documented examples") {
  CHECK(eval_formula(F::CM_Path, {2}) == 2.5);
  CHECK(eval_formula(F::CM_Star, {2}) == 7.25);
  CHECK(eval_formula(F::CM_Kn, {3}) == 12.0);
  CHECK(eval_formula(F::CM_Knm, {2, 2}) == 19.5);
  CHECK(eval_formula(F::RM_Path, {4}) == 5.0);
  CHECK(eval_formula(F::RM_Star, {2}) == 2.5);
  CHECK(eval_formula(F::CM_Wheel, {5}) == 80.0);
}

TEST_CASE("known closed forms at sample points") {
  CHECK(eval_formula(F::C_Kn, {4}) == 6.0);
  CHECK(eval_formula(F::C_Path, {3}) == 2.5);
  CHECK(eval_formula(F::C_Cycle, {4}) == 5.0);
  CHECK(eval_formula(F::C_Star, {5}) == 10.0);
  CHECK(eval_formula(F::R_Kn, {4}) == 3.0);
  CHECK(eval_formula(F::RM_Cycle, {4}) == 13.125);
  CHECK(eval_formula(F::CM_Path, {4}) == 13.125);
  CHECK(eval_formula(F::CM_Cycle, {5}) == 27.5);
  CHECK(eval_formula(F::CM_Kn, {4}) == 34.5);
  CHECK(eval_formula(F::CM_Star, {5}) == 35.0);
  CHECK(eval_formula(F::RM_Wheel, {6}) == 93.375);
  CHECK(eval_formula(F::CL_Kn, {4}) == 13.5);  // octahedron: 6 * (4/2 + 1/4)
}

TEST_CASE("catalog lists every id once with its domain") {
  const auto catalog = list_formulas();
  CHECK(catalog.size() == 20);
  CHECK(kFormulaCount == 20);
  std::set<std::string_view> names;
  for (const auto& d : catalog) {
    names.insert(d.name);
    CHECK(parse_formula_id(d.name) == d.id);
    CHECK(&describe(d.id) == &d);
    CHECK_FALSE(d.validity.empty());
    CHECK_FALSE(d.statement.empty());
    CHECK((d.arity == 1 || d.arity == 2));
  }
  CHECK(names.size() == 20);
  CHECK(describe(F::CM_Wheel).validity == "n > 4");
  CHECK(describe(F::RM_Wheel).validity == "n ≥ 6");
  CHECK(describe(F::CM_Knm).arity == 2);
  CHECK_FALSE(parse_formula_id("CM_Hypercube"));
}

TEST_CASE("evaluation outside the domain is rejected") {
  const std::vector<std::pair<F, std::vector<std::int64_t>>> outside = {
      {F::CM_Wheel, {4}}, {F::RM_Wheel, {5}}, {F::CM_Knm, {1, 3}}, {F::RM_Knm, {4, 1}},
      {F::CM_Kn, {2}},    {F::CM_Star, {1}},  {F::C_Cycle, {2}},   {F::CM_Path, {1}},
      {F::C_Path, {0}},   {F::RM_Path, {-3}}, {F::CM_Knm, {3}},    {F::C_Kn, {3, 3}},
  };
  for (const auto& [id, params] : outside) {
    CAPTURE(describe(id).name);
    CHECK_FALSE(in_domain(id, params));
    CHECK(kind_of([&] { eval_formula(id, params); }) == ErrorKind::OutOfValidityDomain);
  }
  CHECK(in_domain(F::CM_Wheel, std::vector<std::int64_t>{5}));
}

TEST_CASE("internal consistency identities") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(close(eval_formula(F::CM_Star, {n}), 2.5 * eval_formula(F::C_Star, {n}) + eval_formula(F::C_Kn, {n})));
    CHECK(close(eval_formula(F::CM_Path, {n}), 2.5 * eval_formula(F::C_Path, {n}) + eval_formula(F::CL_Path, {n})));
    CHECK(close(eval_formula(F::RM_Star, {n}), eval_formula(F::CM_Star, {n}) - (9.0 * n + 1.0) / 4.0));
    if (n >= 3) CHECK(eval_formula(F::RM_Cycle, {n}) == eval_formula(F::CM_Path, {n}));
    if (n >= 6) {
      CHECK(close(eval_formula(F::RM_Wheel, {n}), eval_formula(F::CM_Wheel, {n}) - (20.0 * n - 3.0) / 8.0));
    }
  }
  CHECK(eval_formula(F::CM_Kn, {3}) == eval_formula(F::CM_Cycle, {3}));
  CHECK(eval_formula(F::CM_Knm, {2, 2}) == eval_formula(F::CM_Cycle, {4}));
  CHECK(eval_formula(F::CM_Star, {2}) == eval_formula(F::CM_Path, {3}));
  for (std::int64_t n = 2; n <= 9; ++n) {
    for (std::int64_t m = 2; m <= 9; ++m) {
      CHECK(eval_formula(F::CM_Knm, {n, m}) == eval_formula(F::CM_Knm, {m, n}));
      CHECK(eval_formula(F::RM_Knm, {n, m}) == eval_formula(F::RM_Knm, {m, n}));
    }
  }
}

TEST_CASE("RM_Path splits into two middle paths") {
  for (std::int64_t n = 4; n <= 20; n += 2) {
    CHECK(eval_formula(F::RM_Path, {n}) == 2.0 * eval_formula(F::CM_Path, {n / 2}));
  }
}

TEST_CASE("every formula matches the exact oracle on small parameters") {
  for (const auto& d : list_formulas()) {
    const std::int64_t hi = d.quantity == Quantity::ResidualCloseness ? d.min_n + 3 : d.min_n + 5;
    for (std::int64_t n = d.min_n; n <= hi; ++n) {
      for (std::int64_t m = d.arity == 2 ? d.min_m : 0; m <= (d.arity == 2 ? d.min_m + 2 : 0); ++m) {
        std::vector<std::int64_t> params{n};
        if (d.arity == 2) params.push_back(m);
        CAPTURE(d.name);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(close(eval_formula(d.id, params), brute_value(d.id, params)));
      }
    }
  }
}
