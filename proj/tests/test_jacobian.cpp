#include "doctest.h"
#include "oja/catalog.hpp"
#include "oja/groebner.hpp"
#include "oja/jacobian.hpp"

using namespace oja;

namespace {

const std::vector<std::string> kVars = default_vars(3);

Poly P(const std::string& s) { return parse_poly(s, kVars); }

std::vector<std::string> catalog_polys() {
  std::vector<std::string> out;
  Catalog c = load_catalog();
  for (const auto& t : c.types)
    for (const auto& v : t.variants) out.push_back(v);
  for (const auto& r : c.rows) out.push_back(r.f2_transpose);
  return out;
}

QuotientAlgebra jac(const Poly& f) { return QuotientAlgebra::build(f, *find_weights(f)); }

}  // namespace

TEST_SUITE("jacobian") {
  TEST_CASE("Milnor numbers of the reduced pairs") {
    CHECK(milnor(P("x1^8+x2^3+x3^2")) == 14);
    CHECK(milnor(P("x1^4+x2^3+x1*x3^2")) == 10);
    CHECK(milnor(P("x1^3*x2+x2^3+x1*x3^2")) == 11);
    CHECK(milnor(P("x1^5+x2^3+x1*x3^2")) == 12);
    CHECK(milnor(P("x1^4+x2^2*x3+x1*x3^2")) == 11);
    CHECK(milnor(P("x1^4+x2^3+x3^3")) == 12);
    CHECK(milnor(P("x1^5+x2^4+x3^2")) == 12);
    CHECK_THROWS_AS(milnor(P("x1^2*x2^2+x3^2")), std::domain_error);
  }

  TEST_CASE("Groebner bases satisfy the S-polynomial criterion") {
    for (const auto& s : catalog_polys()) {
      GroebnerBasis gb = jacobian_ideal_basis(catalog_poly(s).poly);
      for (std::size_t i = 0; i < gb.generators.size(); ++i)
        for (std::size_t j = i + 1; j < gb.generators.size(); ++j)
          CHECK(reduce(s_polynomial(gb.generators[i], gb.generators[j], gb.order), gb).is_zero());
      Poly f = catalog_poly(s).poly;
      for (std::size_t i = 0; i < f.arity(); ++i) CHECK(reduce(f.derivative(i), gb).is_zero());
    }
  }

  TEST_CASE("lex bases agree on ideal membership") {
    Poly f = P("x1^4+x2^3+x1*x3^2");
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < 3; ++i) gens.push_back(f.derivative(i));
    GroebnerBasis lex = groebner(gens, Order::Lex);
    GroebnerBasis grevlex = groebner(gens);
    for (const auto& g : lex.generators) CHECK(reduce(g, grevlex).is_zero());
    for (const auto& g : grevlex.generators) CHECK(reduce(g, lex).is_zero());
  }

  TEST_CASE("Milnor number oracles") {
    for (const auto& s : catalog_polys()) {
      InvertiblePoly f = catalog_poly(s);
      Rational mu = 1;
      for (long w : f.weights.w) mu *= make_rational(f.weights.d - w, w);
      CHECK(Rational(static_cast<long>(milnor(f.poly))) == mu);
    }
    for (auto [a, b, c] : std::vector<std::tuple<int, int, int>>{{2, 3, 5}, {3, 3, 4}, {8, 3, 2}, {5, 4, 2}, {7, 3, 2}}) {
      Poly f = P("x1^" + std::to_string(a) + "+x2^" + std::to_string(b) + "+x3^" + std::to_string(c));
      CHECK(milnor(f) == static_cast<std::size_t>((a - 1) * (b - 1) * (c - 1)));
    }
  }

  TEST_CASE("socle is annihilated by every variable") {
    for (const auto& s : catalog_polys()) {
      QuotientAlgebra a = jac(catalog_poly(s).poly);
      Poly soc = a.basis_poly(a.socle_index());
      for (std::size_t i = 0; i < a.arity(); ++i)
        CHECK(a.normal_form(Poly::variable(a.vars(), i) * soc).is_zero());
      CHECK_FALSE(a.hessian_socle_coeff().is_zero());
      CHECK(a.normal_form(a.hessian()) == a.hessian_socle_coeff() * soc);
    }
  }

  TEST_CASE("trace normalization") {
    QuotientAlgebra a = jac(P("x1^4+x2^3+x1*x3^2"));
    Rational scale(static_cast<long>(a.mu()));
    Vec lambda = a.trace_functional(scale);
    auto apply = [&](const Poly& p) {
      Vec v = a.coordinates(p);
      CycScalar s;
      for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * lambda[k];
      return s;
    };
    CHECK(apply(a.hessian()) == CycScalar(10));
    CHECK(apply(P("x1^3*x2")) == CycScalar::from_rational(1, 24));
    QuotientAlgebra b = jac(P("x1^5+x2^3+x1*x3^2"));
    Vec lb = b.trace_functional(Rational(12));
    Vec v = b.coordinates(P("x2*x3^2"));
    CycScalar s;
    for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * lb[k];
    CHECK(s == CycScalar::from_rational(-1, 6));
  }

  TEST_CASE("solving in the quotient") {
    QuotientAlgebra a = jac(P("x1^8+x2^3+x3^2"));
    auto sol = a.solve(P("x2"), P("x1^6*x2"));
    REQUIRE(sol);
    CHECK(a.normal_form(P("x2") * sol->h) == a.normal_form(P("x1^6*x2")));
    CHECK_FALSE(a.solve(P("x1^6*x2"), P("1")));
  }
}
