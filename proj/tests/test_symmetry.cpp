#include "doctest.h"
#include "oja/linalg.hpp"
#include "oja/symmetry.hpp"

using namespace oja;

namespace {

InvertiblePoly F(const std::string& s) { return build_invertible(parse_poly(s, infer_vars(s))); }

GroupElement G(const std::string& s) { return GroupElement::parse(s); }

long abs_det(const std::vector<std::vector<long>>& e) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : e) m.emplace_back(row.begin(), row.end());
  Rational d = determinant(m);
  return std::labs(d.get_num().get_si());
}

const char* const kPolys[] = {"x1^8+x2^3+x3^2",       "x1^4+x2^3+x1*x3^2",    "x1^3*x2+x2^3+x1*x3^2",
                              "x1^5+x2^3+x1*x3^2",    "x1^4+x2^2*x3+x1*x3^2", "x1^4+x2^3+x3^3",
                              "x1^5+x2^4+x3^2",       "x1^3*x2+x2^2*x3+x1*x3^2", "x1^4*x2+x2^2*x3+x3^2",
                              "x1^6+x1*x2^3+x3^2",    "x1^7+x2^3+x3^2",       "x1^4+x2^2*x3+x2*x3^2"};

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("group elements") {
    GroupElement g = G("(1/2,0,1/2)");
    CHECK(g.order() == 2);
    CHECK(g.age() == 1);
    CHECK(g.fixed_indices() == std::vector<int>{1});
    CHECK((g * g).is_identity());
    GroupElement h = G("0,2/3,1/3");
    CHECK(h.pow(2) == G("0,1/3,2/3"));
    CHECK(h.inverse() == h.pow(2));
    CHECK(G("3/2,-1/2,0") == G("1/2,1/2,0"));
    CHECK_THROWS(G("1/2,x"));
  }

  TEST_CASE("invertibility") {
    CHECK_THROWS(F("x1^2*x2^2+x2^3+x3^2"));
    CHECK_THROWS(F("x1^2+x2^2+x1*x2"));
    InvertiblePoly f = F("x1^4+x2^3+x1*x3^2");
    CHECK(f.E == std::vector<std::vector<long>>{{4, 0, 0}, {0, 3, 0}, {1, 0, 2}});
    CHECK(f.weights.w == std::vector<long>{6, 8, 9});
    CHECK(f.weights.d == 24);
  }

  TEST_CASE("transpose is an involution and reproduces known duals") {
    for (const char* s : kPolys) {
      InvertiblePoly f = F(s);
      CHECK(transpose(transpose(f)).poly == f.poly);
    }
    CHECK(transpose(F("x1^4+x2^3+x1*x3^2")).poly == F("x1^4*x3+x2^3+x3^2").poly);
    CHECK(transpose(F("x1^4*x2+x2^2+x3^3")).poly == F("x1^4+x1*x2^2+x3^3").poly);
  }

  TEST_CASE("maximal group order is |det E| and agrees with the Smith form") {
    for (const char* s : kPolys) {
      InvertiblePoly f = F(s);
      SymmetryGroup g = max_symmetry_group(f);
      CHECK(static_cast<long>(g.order()) == abs_det(f.E));
      std::vector<std::vector<Integer>> m;
      for (const auto& row : f.E) m.emplace_back(row.begin(), row.end());
      auto diag = smith_diagonal(m);
      Integer prod = 1;
      for (const auto& d : diag) prod *= d;
      CHECK(prod == static_cast<long>(g.order()));
      CHECK(diag.back() == g.exponent());
      for (const auto& e : g.elements()) CHECK(is_symmetry(f.poly, e));
    }
  }

  TEST_CASE("literal substitution fixes f") {
    for (const char* s : kPolys) {
      InvertiblePoly f = F(s);
      SymmetryGroup g = max_symmetry_group(f);
      for (const auto& e : g.elements())
        if (24 % e.order() == 0) CHECK(act(f.poly, e) == f.poly);
    }
  }

  TEST_CASE("generators come from the columns of the inverse exponent matrix") {
    InvertiblePoly f = F("x1^4+x2^3+x1*x3^2");
    CHECK(is_symmetry(f.poly, G("1/4,0,7/8")));
    CHECK_FALSE(is_symmetry(f.poly, G("7/8,0,1/2")));
    CHECK(max_symmetry_group(f).contains(G("1/4,0,7/8")));
  }

  TEST_CASE("SL subgroups") {
    SymmetryGroup u = sl_subgroup(max_symmetry_group(F("x1^4+x2^3+x3^3")));
    CHECK(u.order() == 3);
    CHECK(u.generators().size() == 1);
    CHECK((u.generators()[0] == G("0,2/3,1/3") || u.generators()[0] == G("0,1/3,2/3")));
    CHECK(sl_subgroup(max_symmetry_group(F("x1^8+x2^3+x3^2"))).elements() ==
          SymmetryGroup::generate({G("1/2,0,1/2")}, 3).elements());
    CHECK(sl_subgroup(max_symmetry_group(F("x1^4*x2+x2^2+x3^3"))).is_trivial());
    CHECK(u.is_cyclic_prime_or_trivial());
  }

  TEST_CASE("matching up to permutation") {
    Poly a = F("x1^4+x2^3+x1*x3^2").poly;
    Poly b = F("x2^4+x1^3+x2*x3^2").poly;
    auto perm = match_up_to_permutation(a, b);
    REQUIRE(perm);
    CHECK(a.permuted(*perm) == b);
    CHECK_FALSE(match_up_to_permutation(a, F("x1^4+x2^3+x3^3").poly));
    CHECK(all_permutations(3).size() == 6);
  }
}
