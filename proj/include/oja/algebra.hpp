#pragma once

#include <string>
#include <vector>

#include "oja/jacobian.hpp"
#include "oja/linalg.hpp"

namespace oja {

/// Finite-dimensional commutative algebra given by structure constants on a
/// homogeneous basis, with a linear trace defining the pairing.
struct FiniteAlgebra {
  std::vector<std::string> labels;
  std::vector<Rational> degrees;
  std::vector<int> parities;
  /// mult[i][j] = coordinates of e_i * e_j.
  std::vector<std::vector<Vec>> mult;
  Vec unit;
  Vec trace;

  std::size_t dim() const { return labels.size(); }
  Vec basis_vector(std::size_t i) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec power(const Vec& a, unsigned e) const;
  CycScalar apply_trace(const Vec& a) const;
  CycScalar pair(const Vec& a, const Vec& b) const { return apply_trace(multiply(a, b)); }
  Matrix gram() const;
  std::string element_string(const Vec& v) const;
};

/// Jac(f) with the trace normalized by lambda([hess f]) = scale.
FiniteAlgebra to_finite_algebra(const QuotientAlgebra& a, const Rational& scale);

/// p(images) where the variables of p are sent to the given elements.
Vec evaluate(const FiniteAlgebra& a, const Poly& p, const std::vector<Vec>& images);

struct Fingerprint {
  std::size_t dim = 0;
  /// dims of m^0 = A, m^1, m^2, ... down to the first zero.
  std::vector<std::size_t> power_dims;
  std::size_t socle_dim = 0;

  std::string to_string() const;
  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.dim == b.dim && a.power_dims == b.power_dims && a.socle_dim == b.socle_dim;
  }
  friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

/// m is spanned by the basis elements of positive degree.
Fingerprint fingerprint(const FiniteAlgebra& a);

}  // namespace oja
