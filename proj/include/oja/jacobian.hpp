#pragma once

#include <optional>
#include <vector>

#include "oja/groebner.hpp"
#include "oja/linalg.hpp"
#include "oja/poly.hpp"

namespace oja {

/// Weights w_i and degree d with f(t^w x) = t^d f(x).
struct WeightSystem {
  std::vector<long> w;
  long d = 1;

  Rational q(std::size_t i) const { return make_rational(w[i], d); }
  /// Weighted degree divided by d.
  Rational degree(const Monomial& m) const { return weighted_degree(m, w) / d; }
  /// Sum of (d - 2 w_i), the weighted degree of the Hessian.
  long socle_weight() const;
  WeightSystem restricted(const std::vector<int>& fixed) const;
};

/// Positive integral weights with least d, when f is weighted homogeneous for
/// a unique weight ray.
std::optional<WeightSystem> find_weights(const Poly& f);

GroebnerBasis jacobian_ideal_basis(const Poly& f);

/// Standard monomials of a zero-dimensional ideal, or nullopt when some
/// variable has no pure-power leading monomial.
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb, std::size_t arity);

/// dim Jac(f); throws std::domain_error for a non-isolated critical point.
std::size_t milnor(const Poly& f);

/// Jac(f) as an explicit finite-dimensional algebra over its standard monomials.
class QuotientAlgebra {
 public:
  QuotientAlgebra() = default;
  static QuotientAlgebra build(const Poly& f, const WeightSystem& weights);

  const Poly& f() const { return f_; }
  const WeightSystem& weights() const { return weights_; }
  const GroebnerBasis& gb() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t mu() const { return basis_.size(); }
  std::size_t arity() const { return f_.arity(); }
  const std::vector<std::string>& vars() const { return f_.vars(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  Poly normal_form(const Poly& p) const;
  Vec coordinates(const Poly& p) const;
  Poly from_coordinates(const Vec& v) const;
  Poly basis_poly(std::size_t k) const;

  const Monomial& socle() const { return basis_[socle_index_]; }
  std::size_t socle_index() const { return socle_index_; }
  const Poly& hessian() const { return hessian_; }
  /// Coefficient c with [hess f] = c [socle].
  const CycScalar& hessian_socle_coeff() const { return hess_coeff_; }

  /// lambda(socle) for the normalization lambda([hess f]) = scale.
  CycScalar trace_at_socle(const Rational& scale) const;
  /// lambda on the monomial basis, zero off the socle.
  Vec trace_functional(const Rational& scale) const;

  struct Solution {
    Poly h;
    bool unique = false;
  };
  /// H with [a H] = [b], H restricted to polynomials in the `support`
  /// variables when given. nullopt when no such H exists.
  std::optional<Solution> solve(const Poly& a, const Poly& b,
                                const std::optional<std::vector<int>>& support = std::nullopt) const;

 private:
  Poly f_;
  WeightSystem weights_;
  GroebnerBasis gb_;
  Reducer reducer_;
  std::vector<Monomial> basis_;
  std::size_t socle_index_ = 0;
  Poly hessian_;
  CycScalar hess_coeff_;
};

}  // namespace oja
