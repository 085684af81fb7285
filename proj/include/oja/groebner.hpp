#pragma once

#include <map>
#include <vector>

#include "oja/poly.hpp"

namespace oja {

/// Reduced, monic Groebner basis, generators sorted by leading monomial.
struct GroebnerBasis {
  Order order = Order::Grevlex;
  std::vector<std::string> vars;
  std::vector<Poly> generators;
  std::vector<Monomial> leading;

  bool is_unit_ideal() const;
};

Monomial leading_monomial(const Poly& p, Order order);
CycScalar leading_coeff(const Poly& p, Order order);

/// Buchberger's algorithm with the normal selection strategy and both
/// Buchberger criteria, followed by interreduction.
GroebnerBasis groebner(const std::vector<Poly>& gens, Order order = Order::Grevlex);

/// Fully reduced remainder of p modulo the basis.
Poly reduce(const Poly& p, const GroebnerBasis& gb);

Poly s_polynomial(const Poly& f, const Poly& g, Order order);

/// Reduction by a fixed basis, with the basis kept in its own term order.
class Reducer {
 public:
  using OrderedTerms = std::map<Monomial, CycScalar, MonomialOrder>;

  Reducer() = default;
  explicit Reducer(const GroebnerBasis& gb);
  Poly operator()(const Poly& p) const;

 private:
  Order order_ = Order::Grevlex;
  std::vector<OrderedTerms> basis_;
};

}  // namespace oja
