#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "resiclose/generators.hpp"

namespace resiclose {

// Closed forms for closeness (C), closeness of line graphs (CL), closeness of
// middle graphs (CM) and vertex residual closeness (R, RM) of the standard
// families. Parameters follow the family conventions of FamilySpec (Star and
// Wheel count leaves / rim vertices).
enum class FormulaId {
  C_Kn,
  C_Star,
  C_Path,
  C_Cycle,
  R_Kn,
  CL_Cycle,
  CL_Path,
  CL_Star,
  CL_Kn,
  CM_Path,
  CM_Cycle,
  CM_Star,
  CM_Kn,
  CM_Wheel,
  CM_Knm,
  RM_Path,
  RM_Cycle,
  RM_Star,
  RM_Wheel,
  RM_Knm,
};

inline constexpr std::size_t kFormulaCount = 20;

enum class Quantity { Closeness, ResidualCloseness };
enum class BaseTransform { None, Line, Middle };

struct FormulaDescriptor {
  FormulaId id;
  std::string_view name;       // "CM_Wheel"
  std::size_t arity;           // 1 (n) or 2 (n, m)
  std::string_view validity;   // "n > 4"
  std::string_view statement;  // the closed form, e.g. "C(M(W_{1,n})) = 2n^2 + 6n"
  Family family;               // base family the parameters describe
  BaseTransform transform;     // applied to the base graph before measuring
  Quantity quantity;
  std::int64_t min_n;          // validity: every parameter >= its minimum
  std::int64_t min_m;
};

std::span<const FormulaDescriptor> list_formulas();
const FormulaDescriptor& describe(FormulaId id);
std::optional<FormulaId> parse_formula_id(std::string_view name);

bool in_domain(FormulaId id, std::span<const std::int64_t> params);

// Throws Error{OutOfValidityDomain} when params has the wrong arity or falls
// outside the formula's validity domain.
double eval_formula(FormulaId id, std::span<const std::int64_t> params);
double eval_formula(FormulaId id, std::initializer_list<std::int64_t> params);

// The family member a parameter tuple describes (before any transform).
FamilySpec base_family(FormulaId id, std::span<const std::int64_t> params);

}  // namespace resiclose
