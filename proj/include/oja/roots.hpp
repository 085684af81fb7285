#pragma once

#include <vector>

#include "oja/scalar.hpp"

namespace oja {

/// Univariate polynomial, coefficients lowest degree first.
using UPoly = std::vector<CycScalar>;

void upoly_trim(UPoly& p);
UPoly upoly_derivative(const UPoly& p);
/// Remainder of a modulo b (b nonzero).
UPoly upoly_rem(UPoly a, const UPoly& b);
UPoly upoly_quot(UPoly a, const UPoly& b);
/// Monic gcd.
UPoly upoly_gcd(UPoly a, UPoly b);
CycScalar upoly_eval(const UPoly& p, const CycScalar& x);

/// Distinct roots of p lying in the scalar field, in a fixed order.
/// Candidates come from numerical roots under the embedding zeta -> e[1/n],
/// recognised as field elements by lattice reduction, and are kept only after
/// an exact check.
std::vector<CycScalar> roots_in_field(const UPoly& p);

}  // namespace oja
