#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "oja/catalog.hpp"
#include "oja/groebner.hpp"
#include "oja/rows.hpp"
#include "reference_data.hpp"

using namespace oja;
using namespace oja::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    pass = false;
    detail += why;
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "{" + out + "}";
}

const Catalog& catalog() {
  static const Catalog c = load_catalog();
  return c;
}

const std::vector<RowCheck>& row_checks() {
  static const std::vector<RowCheck> checks = verify_rows(catalog().rows, false, thread_count_from_env());
  return checks;
}

Outcome transposes() {
  Outcome o;
  for (const auto& r : catalog().rows) {
    const auto& variants = catalog().type(r.f2_type).variants;
    InvertiblePoly v = catalog_poly(variants[static_cast<std::size_t>(r.f2_variant - 1)]);
    if (!match_up_to_permutation(transpose(v).poly, catalog_poly(r.f2_transpose).poly))
      o.fail("row " + std::to_string(r.id));
  }
  if (o.pass) o.detail = "20/20 rows";
  return o;
}

Outcome milnor_numbers() {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"x^8+y^3+z^2", 14},          {"x^4+y^3+x*z^2", 10},         {"x1^3*x2+x2^3+x1*x3^2", 11},
      {"x1^5+x2^3+x1*x3^2", 12},    {"x1^4+x2^2*x3+x1*x3^2", 11},  {"x^4+y^3+z^3", 12},
      {"x^5+y^4+z^2", 12}};
  std::vector<std::size_t> got;
  for (const auto& [s, mu] : cases) {
    std::size_t m = milnor(parse_poly(s, infer_vars(s)));
    got.push_back(m);
    if (m != mu) o.fail(s + " has mu " + std::to_string(m));
  }
  if (o.pass) o.detail = "mu = " + join(got);
  return o;
}

Outcome u12_remark() {
  Outcome o;
  std::vector<std::size_t> mus, orders;
  for (const auto& v : catalog().type("U12").variants) {
    InvertiblePoly t = transpose(catalog_poly(v));
    mus.push_back(milnor(t.poly));
    orders.push_back(sl_subgroup(max_symmetry_group(t)).order());
  }
  std::sort(mus.begin(), mus.end());
  std::sort(orders.begin(), orders.end());
  if (mus != std::vector<std::size_t>{12, 12, 15}) o.fail("Milnor numbers " + join(mus));
  if (orders != std::vector<std::size_t>{1, 2, 3}) o.fail("SL orders " + join(orders));
  if (o.pass) o.detail = "mu " + join(mus) + ", |G^SL| " + join(orders);
  return o;
}

Outcome sl_groups() {
  Outcome o;
  for (const auto& r : catalog().rows) {
    InvertiblePoly f = catalog_poly(r.f2_transpose);
    auto g = row_generator(r);
    SymmetryGroup listed =
        SymmetryGroup::generate(g ? std::vector<GroupElement>{*g} : std::vector<GroupElement>{}, f.arity());
    if (sl_subgroup(max_symmetry_group(f)).elements() != listed.elements()) o.fail("row " + std::to_string(r.id));
  }
  if (o.pass) o.detail = "20/20 rows";
  return o;
}

Outcome orbifold_dims() {
  Outcome o;
  std::vector<std::size_t> dims;
  for (const auto& rc : reduced_cases()) {
    std::size_t d = row_target(catalog().row(rc.row)).dim();
    dims.push_back(d);
    if (d != rc.dim) o.fail(rc.name + " has dim " + std::to_string(d));
  }
  if (dims != std::vector<std::size_t>{10, 11, 12, 11, 12, 12, 12}) o.fail("dims " + join(dims));
  if (o.pass) o.detail = "dims " + join(dims);
  return o;
}

Outcome structure_constants() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& rc : reduced_cases()) {
    OrbifoldAlgebra a = row_target(catalog().row(rc.row));
    const FiniteAlgebra& alg = a.algebra();
    for (const auto& p : rc.products) {
      ++n;
      Vec got = alg.multiply(parse_element(a, p.a), parse_element(a, p.b));
      if (got != parse_element(a, p.result))
        o.fail(rc.name + ": " + p.a + " o " + p.b + " = " + alg.element_string(got) + ", expected " + p.result);
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " products";
  return o;
}

Outcome relations() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& rc : reduced_cases()) {
    OrbifoldAlgebra a = row_target(catalog().row(rc.row));
    std::vector<Vec> gens;
    for (const auto& g : rc.generators) gens.push_back(parse_element(a, g));
    std::vector<std::string> yv;
    for (std::size_t k = 0; k < gens.size(); ++k) yv.push_back("y" + std::to_string(k + 1));
    for (const auto& rel : rc.relations) {
      ++n;
      Vec v = evaluate(a.algebra(), parse_poly(rel, yv), gens);
      if (!is_zero_vec(v)) o.fail(rc.name + ": " + rel + " = " + a.algebra().element_string(v));
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " relations";
  return o;
}

Outcome stored_witnesses() {
  Outcome o;
  std::size_t passed = 0;
  std::vector<std::string> values;
  for (const auto& rc : reduced_cases()) {
    const CatalogRow& row = catalog().row(rc.row);
    OrbifoldAlgebra t = row_target(row);
    CycScalar value = t.algebra().pair(t.algebra().unit, parse_element(t, "[" + rc.socle + "]v_id"));
    values.push_back(value.to_string());
    if (value != parse_scalar(rc.pairing)) o.fail(rc.name + " pairing value " + value.to_string());
    SourcePresentation s = SourcePresentation::build(catalog_poly(row.f1));
    IsoReport r = verify_frobenius_iso(s, t.algebra(), witness_from_row(row, t));
    if (r.passed())
      ++passed;
    else
      o.fail(rc.name + " witness: " + r.failure());
  }
  std::string summary = std::to_string(passed) + "/7 witnesses pass; pairing values";
  for (const auto& v : values) summary += " " + v;
  o.detail = o.pass ? summary : summary + "; " + o.detail;
  return o;
}

Outcome verify_all() {
  Outcome o;
  std::ostringstream out, err;
  int code = cli::run({"verify", "--all"}, out, err);
  std::map<std::string, std::size_t> methods;
  std::size_t passed = 0;
  for (const auto& c : row_checks()) {
    if (c.passed) ++passed;
    ++methods[c.method];
  }
  std::string split;
  for (const auto& [m, k] : methods) split += (split.empty() ? "" : ", ") + std::to_string(k) + " " + m;
  o.detail = std::to_string(passed) + "/20 certified (" + split + "), exit " + std::to_string(code);
  if (code != 0 || passed != 20) o.pass = false;
  if (methods["witness"] != 7 || methods["search"] != 13) {
    o.pass = false;
    o.detail += "; expected 7 witness, 13 search";
  }
  return o;
}

Outcome duality_graph_shape() {
  Outcome o;
  DualityGraph g = catalog_graph(catalog(), row_checks());
  auto sizes = g.component_sizes();
  std::vector<std::size_t> expected = {4, 4, 3, 3, 3, 2, 2, 2};
  o.detail = "components " + join(sizes) + ", " + std::to_string(g.edges.size()) + " edges";
  if (sizes != expected || g.edges.size() != 24) {
    o.pass = false;
    o.detail += "; expected components " + join(expected) + " and 24 edges";
  }
  return o;
}

CycScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  CycScalar::Coeffs c;
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return CycScalar(c);
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(2024);
  for (int n = 0; n < 50; ++n) {
    CycScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c || a * b != b * a) o.fail("field axioms");
    if (!a.is_zero() && a * a.inverse() != CycScalar(1)) o.fail("inverse");
    if (parse_scalar(a.to_string()) != a || CycScalar::from_coeff_strings(a.to_coeff_strings()) != a)
      o.fail("scalar round trip");
  }

  std::set<std::string> polys;
  for (const auto& t : catalog().types)
    for (const auto& v : t.variants) polys.insert(v);
  for (const auto& r : catalog().rows) polys.insert(r.f2_transpose);
  for (const auto& s : polys) {
    InvertiblePoly f = catalog_poly(s);
    const auto& vars = f.poly.vars();
    Poly euler(vars);
    for (std::size_t i = 0; i < f.arity(); ++i)
      euler += CycScalar(f.weights.w[i]) * Poly::variable(vars, i) * f.poly.derivative(i);
    if (euler != CycScalar(f.weights.d) * f.poly) o.fail("Euler identity for " + s);
    Poly g = f.poly.derivative(0) + Poly::variable(vars, 1);
    for (std::size_t i = 0; i < f.arity(); ++i)
      if ((f.poly * g).derivative(i) != f.poly.derivative(i) * g + f.poly * g.derivative(i)) o.fail("Leibniz " + s);

    GroebnerBasis gb = jacobian_ideal_basis(f.poly);
    for (std::size_t i = 0; i < gb.generators.size(); ++i)
      for (std::size_t j = i + 1; j < gb.generators.size(); ++j)
        if (!reduce(s_polynomial(gb.generators[i], gb.generators[j], gb.order), gb).is_zero())
          o.fail("S-polynomial criterion for " + s);
    QuotientAlgebra q = QuotientAlgebra::build(f.poly, f.weights);
    Poly soc = q.basis_poly(q.socle_index());
    for (std::size_t i = 0; i < f.arity(); ++i)
      if (!q.normal_form(Poly::variable(vars, i) * soc).is_zero()) o.fail("socle annihilation for " + s);
    Rational mu = 1;
    for (long w : f.weights.w) mu *= make_rational(f.weights.d - w, w);
    if (Rational(static_cast<long>(q.mu())) != mu) o.fail("weight formula for " + s);
  }
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 4; ++b) {
      std::string s = "x1^" + std::to_string(a) + "+x2^" + std::to_string(b) + "+x3^2";
      if (milnor(parse_poly(s, default_vars(3))) != static_cast<std::size_t>((a - 1) * (b - 1)))
        o.fail("Brieskorn-Pham " + s);
    }

  std::size_t algebras = 0;
  for (const auto& r : catalog().rows) {
    for (bool invariant : {true, false}) {
      if (!invariant && !row_generator(r)) continue;
      OrbifoldAlgebra oa = OrbifoldAlgebra::build(catalog_poly(r.f2_transpose), row_generator(r), invariant);
      ++algebras;
      const FiniteAlgebra& a = oa.algebra();
      std::size_t n = a.dim();
      std::string where = "row " + std::to_string(r.id) + (invariant ? "" : " (all sectors)");
      for (std::size_t i = 0; i < n; ++i) {
        Vec e = a.basis_vector(i);
        if (a.multiply(a.unit, e) != e) o.fail("identity, " + where);
        for (std::size_t j = 0; j < n; ++j) {
          Vec ji = a.mult[j][i];
          if (a.parities[i] * a.parities[j] % 2)
            for (auto& x : ji) x = -x;
          if (a.mult[i][j] != ji) o.fail("commutativity, " + where);
          for (std::size_t l = 0; l < n; ++l)
            if (!a.mult[i][j][l].is_zero() && a.parities[l] != (a.parities[i] + a.parities[j]) % 2)
              o.fail("parity, " + where);
          for (std::size_t k = 0; k < n; ++k) {
            Vec left = a.multiply(a.mult[i][j], a.basis_vector(k));
            Vec right = a.multiply(e, a.mult[j][k]);
            if (left != right) o.fail("associativity, " + where);
            if (a.apply_trace(left) != a.apply_trace(right)) o.fail("Frobenius, " + where);
          }
        }
      }
      if (rank_of(a.gram()) != n) o.fail("degenerate pairing, " + where);
    }
  }
  if (o.pass) o.detail = std::to_string(polys.size()) + " polynomials, " + std::to_string(algebras) + " algebras";
  return o;
}

Outcome fingerprints() {
  Outcome o;
  std::map<std::size_t, std::set<std::string>> by_dim;
  std::map<std::string, std::set<std::string>> clusters;
  for (const auto& c : row_checks()) {
    if (c.source_fingerprint != c.target_fingerprint) o.fail("row " + std::to_string(c.id) + " fingerprints differ");
    std::string fp = c.target_fingerprint.to_string();
    by_dim[c.dim].insert(fp);
    if (c.dim == 12) clusters[catalog().row(c.id).f1_type].insert(fp);
  }
  for (auto a = by_dim.begin(); a != by_dim.end(); ++a)
    for (auto b = std::next(a); b != by_dim.end(); ++b)
      for (const auto& x : a->second)
        if (b->second.count(x)) o.fail("dims " + std::to_string(a->first) + " and " + std::to_string(b->first));
  std::string report;
  for (const auto& [type, fps] : clusters) {
    report += (report.empty() ? "" : " | ") + type + ":";
    for (const auto& fp : fps) report += " " + fp;
  }
  o.detail = (o.pass ? "families 10/11/12 separated; dim 12 report " : o.detail + "; ") + report;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "transposes match the catalog", transposes},
      {2, "Milnor numbers", milnor_numbers},
      {3, "U12 transposes", u12_remark},
      {4, "SL groups", sl_groups},
      {5, "orbifold dimensions", orbifold_dims},
      {6, "structure constants", structure_constants},
      {7, "generator relations", relations},
      {8, "stored Frobenius witnesses", stored_witnesses},
      {9, "verify --all", verify_all},
      {10, "isomorphism graph", duality_graph_shape},
      {11, "property suites", properties},
      {12, "fingerprint separation", fingerprints},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << c.id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << o.detail
              << std::endl;
  }
  std::cout << (12 - failures) << "/12 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
