#include "doctest.h"
#include "oja/catalog.hpp"
#include "oja/roots.hpp"
#include "oja/rows.hpp"
#include "reference_data.hpp"

using namespace oja;
using namespace oja::testing;

namespace {

IsoWitness images(const OrbifoldAlgebra& t, const std::vector<std::string>& elems) {
  IsoWitness w;
  for (const auto& e : elems) w.images.push_back(e == "0" ? Vec(t.dim()) : parse_element(t, e));
  return w;
}

UPoly U(std::initializer_list<long> c) {
  UPoly p;
  for (long x : c) p.push_back(CycScalar(x));
  return p;
}

}  // namespace

TEST_SUITE("duality") {
  TEST_CASE("roots in the scalar field") {
    const auto& nc = named_constants();
    auto r = roots_in_field(U({1, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] * r[0] == CycScalar(-1));
    CHECK(r[0] != r[1]);
    CHECK(roots_in_field(U({-2, 0, 0, 1})).empty());
    CHECK(roots_in_field(U({0, 0, 1})).size() == 1);
    auto s = roots_in_field(U({6, 0, 1}));
    REQUIRE(s.size() == 2);
    CHECK((s[0] == nc.sqrt_minus6 || s[1] == nc.sqrt_minus6));
    UPoly cyc = U({1, 0, 0, 0, -1, 0, 0, 0, 1});
    CHECK(roots_in_field(cyc).size() == 8);
    UPoly mixed = U({-1, 0, 1});
    mixed = {CycScalar(-3), CycScalar(0), CycScalar(1)};
    CHECK(roots_in_field(mixed).size() == 2);
    CHECK(upoly_gcd(U({-1, 0, 1}), U({1, 1})) == U({1, 1}));
  }

  TEST_CASE("polynomial systems") {
    auto vars = std::vector<std::string>{"c1", "c2"};
    std::vector<Poly> eqs = {parse_poly("c1^2 + 1", vars), parse_poly("c1*c2 - 2", vars)};
    auto sol = solve_system(vars, eqs, [](const std::vector<CycScalar>&) { return true; });
    REQUIRE(sol);
    CHECK((*sol)[0] * (*sol)[0] == CycScalar(-1));
    CHECK((*sol)[0] * (*sol)[1] == CycScalar(2));
    CHECK_FALSE(solve_system(vars, {parse_poly("c1^2 - 2*c2^2", vars), parse_poly("c2 - 1", vars),
                                    parse_poly("c1^3 - 2", vars)},
                             [](const std::vector<CycScalar>&) { return true; }));
    auto free = solve_system(vars, {parse_poly("c1 - c2", vars)}, [](const std::vector<CycScalar>& v) {
      return v[0] == CycScalar(2);
    });
    REQUIRE(free);
    CHECK((*free)[1] == CycScalar(2));
  }

  TEST_CASE("identity map on a Jacobian algebra") {
    InvertiblePoly f = catalog_poly("x1^4+x2^3+x1*x3^2");
    SourcePresentation s = SourcePresentation::build(f);
    OrbifoldAlgebra t = OrbifoldAlgebra::build(f, std::nullopt);
    IsoReport r = verify_frobenius_iso(s, t.algebra(), images(t, {"[x1]v_id", "[x2]v_id", "[x3]v_id"}));
    CHECK(r.passed());
    CHECK(r.failure().empty());
  }

  TEST_CASE("stored witness for the dimension-10 pair and its misscaled variant") {
    Catalog c = load_catalog();
    const CatalogRow& row = c.row(2);
    SourcePresentation s = SourcePresentation::build(catalog_poly(row.f1));
    OrbifoldAlgebra t = row_target(row);
    IsoReport good = verify_frobenius_iso(s, t.algebra(), witness_from_row(row, t));
    CHECK(good.passed());
    REQUIRE(good.source_pairing);
    CHECK(*good.source_pairing == *good.target_pairing);

    IsoReport bad = verify_algebra_iso(s, t.algebra(), images(t, {"[x1^2]v_id", "[x2]v_id", "v_g"}));
    CHECK_FALSE(bad.algebra_iso);
    CHECK(bad.failure() == "relations: relation 4*y1^3 + y3^2 maps to 20*[x1^6]v_id != 0");
  }

  TEST_CASE("Q12 map needs y3 -> v_g without the imaginary unit") {
    Catalog c = load_catalog();
    const CatalogRow& row = c.row(6);
    SourcePresentation s = SourcePresentation::build(catalog_poly(row.f1));
    OrbifoldAlgebra t = row_target(row);
    IsoReport stored = verify_frobenius_iso(s, t.algebra(), witness_from_row(row, t));
    CHECK_FALSE(stored.passed());
    CHECK(stored.failure() == "relations: relation 5*y1^4 + y3^2 maps to -20*[x1^3*x2]v_id != 0");
    IsoReport fixed = verify_frobenius_iso(s, t.algebra(), images(t, {"[x1^2]v_id", "1/4*[x3]v_id", "v_g"}));
    CHECK(fixed.algebra_iso);
  }

  TEST_CASE("U12 order-2 stored map is an algebra map with the wrong pairing") {
    Catalog c = load_catalog();
    const CatalogRow& row = c.row(12);
    SourcePresentation s = SourcePresentation::build(catalog_poly(row.f1));
    OrbifoldAlgebra t = row_target(row);
    IsoReport r = verify_frobenius_iso(s, t.algebra(), witness_from_row(row, t));
    CHECK(r.algebra_iso);
    CHECK_FALSE(r.frobenius);
    IsoReport scaled = verify_frobenius_iso(s, t.algebra(), witness_from_row(row, t), true);
    REQUIRE(scaled.rescaling);
    CHECK(*scaled.rescaling == CycScalar::from_rational(2, 3));
  }

  TEST_CASE("search recovers maps and rejects dimension mismatches") {
    InvertiblePoly e14 = catalog_poly("x1^8+x2^3+x3^2");
    SourcePresentation s = SourcePresentation::build(e14);
    OrbifoldAlgebra t = OrbifoldAlgebra::build(catalog_poly("x1^4*x2+x2^2+x3^3"), std::nullopt);
    SearchResult r = search_iso(s, t.algebra());
    REQUIRE(r.witness);
    CHECK(t.dim() == 14);
    CHECK(verify_frobenius_iso(s, t.algebra(), *r.witness).passed());

    OrbifoldAlgebra small = OrbifoldAlgebra::build(catalog_poly("x1^4+x2^3+x1*x3^2"), std::nullopt);
    SearchResult none = search_iso(s, small.algebra());
    CHECK_FALSE(none.witness);
    CHECK_FALSE(none.reason.empty());
  }

  TEST_CASE("rows with a rescaled pairing") {
    Catalog c = load_catalog();
    for (int id : {19, 20}) {
      RowCheck k = verify_row(c.row(id));
      CHECK(k.passed);
      CHECK(k.method == "search+rescaling");
      REQUIRE(k.report.rescaling);
      SearchOptions strict;
      strict.allow_rescaling = false;
      SourcePresentation s = SourcePresentation::build(catalog_poly(c.row(id).f1));
      OrbifoldAlgebra t = row_target(c.row(id));
      CHECK_FALSE(search_iso(s, t.algebra(), strict).witness);
    }
  }

  TEST_CASE("fingerprints") {
    Catalog c = load_catalog();
    auto checks = verify_rows(c.rows, false, 1);
    for (const auto& k : checks) {
      CAPTURE(k.id);
      CHECK(k.passed);
      CHECK(k.source_fingerprint == k.target_fingerprint);
    }
    Fingerprint q10 = fingerprint(row_target(c.row(2)).algebra());
    Fingerprint q11 = fingerprint(row_target(c.row(3)).algebra());
    Fingerprint u12 = fingerprint(row_target(c.row(8)).algebra());
    CHECK(q10 != q11);
    CHECK(q11 != u12);
    CHECK(q10.to_string() == "dim=10 m^k=(10,9,6,3,1,0) socle=1");
  }

  TEST_CASE("graph deduplicates nodes and closes components") {
    InvertiblePoly a = catalog_poly("x1^4+x2^3+x3^3");
    InvertiblePoly b = catalog_poly("x2^4+x1^3+x3^3");
    InvertiblePoly c = catalog_poly("x1^4+x2^3+x2*x3^2");
    GroupElement g = GroupElement::parse("0,2/3,1/3");
    std::vector<std::pair<GraphNode, GraphNode>> pairs = {
        {GraphNode{a, std::nullopt, "a"}, GraphNode{a, g, "a/g"}},
        {GraphNode{b, std::nullopt, "b"}, GraphNode{c, std::nullopt, "c"}},
        {GraphNode{c, std::nullopt, "c"}, GraphNode{a, g, "a/g"}},
    };
    DualityGraph gr = duality_graph(pairs, {"one", "two", "three"});
    CHECK(gr.nodes.size() == 3);
    CHECK(gr.component_sizes() == std::vector<std::size_t>{3});
    CHECK(gr.edges.size() == 3);
    CHECK(gr.to_dot().rfind("graph duality {", 0) == 0);
  }
}
