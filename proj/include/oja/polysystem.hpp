#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "oja/poly.hpp"

namespace oja {

struct SystemOptions {
  /// Upper bound on explored search nodes.
  std::size_t node_cap = 20000;
  /// Values tried for variables the equations leave free.
  std::vector<CycScalar> free_values = {CycScalar(1), CycScalar(-1), CycScalar(2), CycScalar(Rational(1, 2)),
                                        CycScalar(3)};
};

struct SystemStats {
  std::size_t nodes = 0;
  bool capped = false;
};

using SolutionFilter = std::function<bool(const std::vector<CycScalar>&)>;

/// Searches for a common zero in the given variables of the equations with coordinates in the
/// scalar field, returning the first one the filter accepts. Branches on
/// roots of univariate equations, eliminates variables that occur linearly
/// with constant coefficient, splits monomial equations and falls back to a
/// lexicographic Groebner basis.
std::optional<std::vector<CycScalar>> solve_system(const std::vector<std::string>& vars,
                                                   const std::vector<Poly>& equations, const SolutionFilter& accept,
                                                   const SystemOptions& options = {}, SystemStats* stats = nullptr);

}  // namespace oja
