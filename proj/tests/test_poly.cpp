#include <random>

#include "doctest.h"
#include "oja/jacobian.hpp"
#include "oja/poly.hpp"

using namespace oja;

namespace {

const std::vector<std::string> kVars = default_vars(3);

Poly P(const std::string& s) { return parse_poly(s, kVars); }

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 3), c(-5, 5), n(1, 5);
  Poly p(kVars);
  int terms = n(rng);
  for (int k = 0; k < terms; ++k) p.add_term({e(rng), e(rng), e(rng)}, CycScalar(c(rng)));
  return p;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("parse and print") {
    CHECK(P("x1^8+x2^3+x3^2").to_string() == "x1^8 + x2^3 + x3^2");
    CHECK(P("x^4 + y^3 + x*z^2") == P("x1^4+x2^3+x1*x3^2"));
    CHECK(P("2*x1*x2 - 3") == P("-3 + 2*x2*x1"));
    CHECK_THROWS_AS(P("x4^2"), std::invalid_argument);
    CHECK_THROWS_AS(P("x1^"), std::invalid_argument);
    CHECK_THROWS_AS(P(""), std::invalid_argument);
    CHECK(infer_vars("x^2+y*z") == kVars);
    CHECK(infer_vars("x1^5+x2^2") == default_vars(2));
    std::mt19937 rng(3);
    for (int k = 0; k < 30; ++k) {
      Poly p = random_poly(rng);
      if (p.is_zero()) continue;
      CHECK(P(p.to_string()) == p);
    }
  }

  TEST_CASE("hessians") {
    CHECK(hessian(P("x1^8+x2^3+x3^2")) == P("672*x1^6*x2"));
    CHECK(hessian(P("x1^4+x2^3+x3^3")) == P("432*x1^2*x2*x3"));
    Poly f = P("x1^4+x2^2*x3+x2*x3^2");
    CHECK(determinant_cofactor(hessian_matrix(f), kVars) == determinant_bareiss(hessian_matrix(f), kVars));
    CHECK(hessian(Poly::constant({}, CycScalar(5))) == Poly::constant({}, CycScalar(1)));
  }

  TEST_CASE("Leibniz rule on random products") {
    std::mt19937 rng(11);
    for (int n = 0; n < 40; ++n) {
      Poly f = random_poly(rng), g = random_poly(rng);
      for (std::size_t i = 0; i < 3; ++i)
        CHECK((f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i));
    }
  }

  TEST_CASE("Euler identity for quasi-homogeneous polynomials") {
    for (const char* s : {"x1^8+x2^3+x3^2", "x1^4+x2^3+x1*x3^2", "x1^3*x2+x2^3+x1*x3^2", "x1^4*x2+x2^2*x3+x3^2",
                          "x1^3*x2+x2^2+x1*x3^3", "x1^6+x1*x2^3+x3^2"}) {
      Poly f = P(s);
      auto w = find_weights(f);
      REQUIRE(w);
      Poly euler(kVars);
      for (std::size_t i = 0; i < 3; ++i)
        euler += CycScalar(w->w[i]) * Poly::variable(kVars, i) * f.derivative(i);
      CHECK(euler == CycScalar(w->d) * f);
      CHECK(is_weighted_homogeneous(f, w->w, w->d));
    }
    CHECK_FALSE(find_weights(P("x1^2+x1^3+x2^2")));
  }

  TEST_CASE("restriction and lift") {
    Poly f = P("x1^8+x2^3+x3^2+x1*x3");
    Restriction r = restrict_to(f, {1});
    CHECK(r.embedding == std::vector<int>{1});
    CHECK(r.poly.to_string() == "x2^3");
    CHECK(lift(r.poly, r.embedding, kVars) == P("x2^3"));
    Restriction all = restrict_to(f, {0, 1, 2});
    CHECK(all.poly == f);
    CHECK(restrict_to(f, {}).poly.arity() == 0);
  }

  TEST_CASE("composition and permutation") {
    Poly f = P("x1^2*x2 + x3");
    CHECK(f.compose({P("x2"), P("x1"), P("x1 + x2")}) == P("x2^2*x1 + x1 + x2"));
    CHECK(f.permuted({1, 0, 2}) == P("x2^2*x1 + x3"));
    CHECK(exact_divide(P("x1^2*x2 + x1*x2^2"), P("x1+x2")) == P("x1*x2"));
    CHECK_THROWS(exact_divide(P("x1^2 + 1"), P("x1")));
  }
}
