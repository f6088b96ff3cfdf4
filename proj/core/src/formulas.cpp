#include "resiclose/formulas.hpp"

#include <array>
#include <cmath>
#include <string>

#include "resiclose/error.hpp"

namespace resiclose {
namespace {

using F = FormulaId;
using Q = Quantity;
using T = BaseTransform;

constexpr std::array<FormulaDescriptor, kFormulaCount> kCatalog{{
    {F::C_Kn, "C_Kn", 1, "n ≥ 1", "C(K_n) = n(n-1)/2", Family::Complete, T::None, Q::Closeness, 1, 0},
    {F::C_Star, "C_Star", 1, "n ≥ 1", "C(S_{1,n}) = n(n+3)/4", Family::Star, T::None, Q::Closeness, 1, 0},
    {F::C_Path, "C_Path", 1, "n ≥ 1", "C(P_n) = 2n - 4 + 2^{2-n}", Family::Path, T::None, Q::Closeness, 1, 0},
    {F::C_Cycle, "C_Cycle", 1, "n ≥ 3",
     "C(C_n) = 2n(1 - 2^{-(n-1)/2}) for odd n, n(2 - 3/2^{n/2}) for even n", Family::Cycle,
     T::None, Q::Closeness, 3, 0},
    {F::R_Kn, "R_Kn", 1, "n ≥ 2", "R(K_n) = (n-1)(n-2)/2", Family::Complete, T::None,
     Q::ResidualCloseness, 2, 0},
    {F::CL_Cycle, "CL_Cycle", 1, "n ≥ 3", "C(L(C_n)) = C(C_n)", Family::Cycle, T::Line, Q::Closeness, 3, 0},
    {F::CL_Path, "CL_Path", 1, "n ≥ 2", "C(L(P_n)) = C(P_{n-1}) = 2n - 6 + 2^{3-n}", Family::Path,
     T::Line, Q::Closeness, 2, 0},
    {F::CL_Star, "CL_Star", 1, "n ≥ 1", "C(L(S_{1,n})) = C(K_n) = n(n-1)/2", Family::Star, T::Line,
     Q::Closeness, 1, 0},
    {F::CL_Kn, "CL_Kn", 1, "n ≥ 2", "C(L(K_n)) = n(n^3 + 2n^2 - 13n + 10)/16", Family::Complete,
     T::Line, Q::Closeness, 2, 0},
    {F::CM_Path, "CM_Path", 1, "n ≥ 2", "C(M(P_n)) = 7n - 16 + 18/2^n", Family::Path, T::Middle,
     Q::Closeness, 2, 0},
    {F::CM_Cycle, "CM_Cycle", 1, "n ≥ 3",
     "C(M(C_n)) = 3/2 C(C_n) + 4n(1 - 2^{-n/2}) for even n, "
     "3/2 C(C_n) + 2n(2(1 - 2^{-(n-1)/2}) + 2^{-(n+1)/2}) for odd n",
     Family::Cycle, T::Middle, Q::Closeness, 3, 0},
    {F::CM_Star, "CM_Star", 1, "n ≥ 2", "C(M(S_{1,n})) = (9n^2 + 11n)/8", Family::Star, T::Middle,
     Q::Closeness, 2, 0},
    {F::CM_Kn, "CM_Kn", 1, "n ≥ 3", "C(M(K_n)) = n(n-1)(n^2 + 7n + 2)/16", Family::Complete,
     T::Middle, Q::Closeness, 3, 0},
    {F::CM_Wheel, "CM_Wheel", 1, "n > 4", "C(M(W_{1,n})) = 2n^2 + 6n", Family::Wheel, T::Middle,
     Q::Closeness, 5, 0},
    {F::CM_Knm, "CM_Knm", 2, "n, m > 1",
     "C(M(K_{n,m})) = ((m+n)(m+n-1) + mn(4 + 6(m+n) + 2mn))/8", Family::CompleteBipartite,
     T::Middle, Q::Closeness, 2, 2},
    {F::RM_Path, "RM_Path", 1, "n ≥ 2",
     "R(M(P_n)) = 2 C(M(P_{n/2})) for even n, C(M(P_{(n-1)/2})) + C(M(P_{(n+1)/2})) for odd n",
     Family::Path, T::Middle, Q::ResidualCloseness, 2, 0},
    {F::RM_Cycle, "RM_Cycle", 1, "n ≥ 3", "R(M(C_n)) = 7n - 16 + 18/2^n", Family::Cycle, T::Middle,
     Q::ResidualCloseness, 3, 0},
    {F::RM_Star, "RM_Star", 1, "n ≥ 2", "R(M(S_{1,n})) = (9n^2 - 7n - 2)/8", Family::Star,
     T::Middle, Q::ResidualCloseness, 2, 0},
    {F::RM_Wheel, "RM_Wheel", 1, "n ≥ 6", "R(M(W_{1,n})) = (16n^2 + 28n + 3)/8", Family::Wheel,
     T::Middle, Q::ResidualCloseness, 6, 0},
    {F::RM_Knm, "RM_Knm", 2, "n, m > 1",
     "R(M(K_{n,m})) = ((m+n)(m+n-11) + mn(6(m+n) + 2mn) + 5)/8", Family::CompleteBipartite,
     T::Middle, Q::ResidualCloseness, 2, 2},
}};

double half_pow(std::int64_t k) { return std::ldexp(1.0, -static_cast<int>(k)); }
double d(std::int64_t v) { return static_cast<double>(v); }

double cycle_closeness(std::int64_t n) {
  if (n % 2 == 1) return d(2 * n) * (1.0 - half_pow((n - 1) / 2));
  return d(n) * (2.0 - 3.0 * half_pow(n / 2));
}

// Valid from n = 1 (M(P_1) is a single vertex and the expression gives 0).
double middle_path_closeness(std::int64_t n) { return d(7 * n - 16) + 18.0 * half_pow(n); }

double evaluate(F id, std::int64_t n, std::int64_t m) {
  switch (id) {
    case F::C_Kn: return d(n * (n - 1)) / 2.0;
    case F::C_Star: return d(n * (n + 3)) / 4.0;
    case F::C_Path: return d(2 * n - 4) + 4.0 * half_pow(n);
    case F::C_Cycle: return cycle_closeness(n);
    case F::R_Kn: return d((n - 1) * (n - 2)) / 2.0;
    case F::CL_Cycle: return cycle_closeness(n);
    case F::CL_Path: return d(2 * n - 6) + 8.0 * half_pow(n);
    case F::CL_Star: return d(n * (n - 1)) / 2.0;
    case F::CL_Kn: return d(n * (n * n * n + 2 * n * n - 13 * n + 10)) / 16.0;
    case F::CM_Path: return middle_path_closeness(n);
    case F::CM_Cycle:
      if (n % 2 == 0) return 1.5 * cycle_closeness(n) + d(4 * n) * (1.0 - half_pow(n / 2));
      return 1.5 * cycle_closeness(n) +
             d(2 * n) * (2.0 * (1.0 - half_pow((n - 1) / 2)) + half_pow((n + 1) / 2));
    case F::CM_Star: return d(9 * n * n + 11 * n) / 8.0;
    case F::CM_Kn: return d(n * (n - 1) * (n * n + 7 * n + 2)) / 16.0;
    case F::CM_Wheel: return d(2 * n * n + 6 * n);
    case F::CM_Knm:
      return d((m + n) * (m + n - 1) + m * n * (4 + 6 * (m + n) + 2 * m * n)) / 8.0;
    case F::RM_Path:
      if (n % 2 == 0) return 2.0 * middle_path_closeness(n / 2);
      return middle_path_closeness((n - 1) / 2) + middle_path_closeness((n + 1) / 2);
    case F::RM_Cycle: return middle_path_closeness(n);
    case F::RM_Star: return d(9 * n * n - 7 * n - 2) / 8.0;
    case F::RM_Wheel: return d(16 * n * n + 28 * n + 3) / 8.0;
    case F::RM_Knm:
      return d((m + n) * (m + n - 11) + m * n * (6 * (m + n) + 2 * m * n) + 5) / 8.0;
  }
  return 0.0;
}

std::string format_params(std::span<const std::int64_t> params) {
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

}  // namespace

std::span<const FormulaDescriptor> list_formulas() { return kCatalog; }

const FormulaDescriptor& describe(FormulaId id) { return kCatalog[static_cast<std::size_t>(id)]; }

std::optional<FormulaId> parse_formula_id(std::string_view name) {
  for (const auto& entry : kCatalog) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

bool in_domain(FormulaId id, std::span<const std::int64_t> params) {
  const auto& entry = describe(id);
  if (params.size() != entry.arity) return false;
  if (params[0] < entry.min_n) return false;
  return entry.arity == 1 || params[1] >= entry.min_m;
}

double eval_formula(FormulaId id, std::span<const std::int64_t> params) {
  if (!in_domain(id, params)) {
    const auto& entry = describe(id);
    throw Error(ErrorKind::OutOfValidityDomain,
                std::string(entry.name) + format_params(params) + " outside " +
                    std::string(entry.validity) + " (arity " + std::to_string(entry.arity) + ")");
  }
  return evaluate(id, params[0], params.size() > 1 ? params[1] : 0);
}

double eval_formula(FormulaId id, std::initializer_list<std::int64_t> params) {
  return eval_formula(id, std::span<const std::int64_t>(params.begin(), params.size()));
}

FamilySpec base_family(FormulaId id, std::span<const std::int64_t> params) {
  const auto& entry = describe(id);
  if (params.size() != entry.arity || params[0] < 0 || (entry.arity == 2 && params[1] < 0)) {
    throw Error(ErrorKind::OutOfValidityDomain,
                std::string(entry.name) + format_params(params) + " has the wrong shape");
  }
  FamilySpec spec{entry.family, static_cast<std::size_t>(params[0])};
  if (entry.arity == 2) spec.m = static_cast<std::size_t>(params[1]);
  return spec;
}

}  // namespace resiclose
