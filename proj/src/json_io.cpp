#include "oja/json_io.hpp"

#include <stdexcept>

namespace oja {

ojson to_json(const CycScalar& c) {
  ojson j;
  j["value"] = c.to_string();
  j["coords"] = c.to_coeff_strings();
  return j;
}

CycScalar scalar_from_json(const ojson& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_array()) return CycScalar::from_coeff_strings(j.get<std::vector<std::string>>());
  if (j.is_object() && j.contains("coords")) return scalar_from_json(j.at("coords"));
  throw std::invalid_argument("scalar must be a string, a coordinate list or an object with coords");
}

ojson to_json(const Poly& p) {
  ojson j;
  j["vars"] = p.vars();
  j["text"] = p.to_string();
  ojson terms = ojson::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    ojson t;
    t["exp"] = it->first;
    t["coeff"] = it->second.to_coeff_strings();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

Poly poly_from_json(const ojson& j) {
  Poly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) {
    Monomial m = t.at("exp").get<Monomial>();
    if (m.size() != p.arity()) throw std::invalid_argument("exponent vector has the wrong length");
    p.add_term(m, scalar_from_json(t.at("coeff")));
  }
  return p;
}

ojson to_json(const GroupElement& g) { return g.to_string(); }

ojson to_json(const SymmetryGroup& g) {
  ojson j;
  j["order"] = g.order();
  ojson gens = ojson::array();
  for (const auto& e : g.generators()) gens.push_back(e.to_string());
  j["generators"] = gens;
  ojson els = ojson::array();
  for (const auto& e : g.elements()) els.push_back(e.to_string());
  j["elements"] = els;
  return j;
}

ojson to_json(const InvertiblePoly& f) {
  ojson j;
  j["poly"] = f.poly.to_string();
  j["exponents"] = f.E;
  j["weights"] = f.weights.w;
  j["degree"] = f.weights.d;
  return j;
}

namespace {

ojson vec_json(const Vec& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

ojson matrix_json(const Matrix& m) {
  ojson a = ojson::array();
  for (const auto& row : m) a.push_back(vec_json(row));
  return a;
}

}  // namespace

ojson to_json(const QuotientAlgebra& a, const Rational& trace_scale) {
  ojson j;
  j["vars"] = a.vars();
  j["weights"] = a.weights().w;
  j["degree"] = a.weights().d;
  ojson gb = ojson::array();
  for (const auto& g : a.gb().generators) gb.push_back(g.to_string());
  j["groebner_basis"] = gb;
  ojson basis = ojson::array();
  for (const auto& m : a.basis()) {
    std::string s = monomial_string(m, a.vars());
    basis.push_back(s.empty() ? "1" : s);
  }
  j["basis"] = basis;
  j["mu"] = a.mu();
  std::string socle = monomial_string(a.socle(), a.vars());
  j["socle"] = socle.empty() ? "1" : socle;
  j["hessian"] = a.hessian().to_string();
  j["hessian_socle_coeff"] = a.hessian_socle_coeff().to_string();
  j["trace_scale"] = trace_scale.get_str();
  j["trace_at_socle"] = a.trace_at_socle(trace_scale).to_string();
  return j;
}

ojson to_json(const OrbifoldAlgebra& a) {
  ojson j;
  j["f"] = a.f().poly.to_string();
  j["group"] = to_json(a.group());
  j["invariant_only"] = a.invariant_only();
  ojson sectors = ojson::array();
  for (const auto& s : a.sectors()) {
    ojson sj;
    sj["name"] = sector_name(s.power);
    sj["element"] = s.g.to_string();
    sj["fixed"] = s.fixed;
    sj["f_g"] = s.f_g.to_string();
    sj["parity"] = s.parity;
    ojson basis = ojson::array();
    for (auto k : s.kept) {
      std::string m = monomial_string(s.algebra.basis()[k], s.algebra.vars());
      basis.push_back(m.empty() ? "1" : m);
    }
    sj["basis"] = basis;
    sectors.push_back(sj);
  }
  j["sectors"] = sectors;
  const FiniteAlgebra& alg = a.algebra();
  j["dim"] = alg.dim();
  j["labels"] = alg.labels;
  j["parities"] = alg.parities;
  ojson degrees = ojson::array();
  for (const auto& d : alg.degrees) degrees.push_back(d.get_str());
  j["degrees"] = degrees;
  ojson tensor = ojson::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t k = 0; k < alg.dim(); ++k)
      for (std::size_t l = 0; l < alg.dim(); ++l)
        if (!alg.mult[i][k][l].is_zero()) tensor.push_back({i, k, l, alg.mult[i][k][l].to_string()});
  j["structure"] = tensor;
  j["gram"] = matrix_json(alg.gram());
  return j;
}

ojson to_json(const Fingerprint& fp) {
  ojson j;
  j["dim"] = fp.dim;
  j["power_dims"] = fp.power_dims;
  j["socle_dim"] = fp.socle_dim;
  return j;
}

ojson to_json(const IsoReport& r) {
  ojson j;
  j["algebra_iso"] = r.algebra_iso;
  j["frobenius"] = r.frobenius;
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (r.source_pairing) j["source_pairing"] = r.source_pairing->to_string();
  if (r.target_pairing) j["target_pairing"] = r.target_pairing->to_string();
  if (r.rescaling) {
    j["rescaling"] = r.rescaling->to_string();
    j["socle_weight"] = r.socle_weight;
  }
  return j;
}

ojson to_json(const RowCheck& c) {
  ojson j;
  j["row"] = c.id;
  j["passed"] = c.passed;
  j["method"] = c.method;
  j["dim"] = c.dim;
  j["witness"] = c.witness_text;
  if (!c.note.empty()) j["note"] = c.note;
  if (c.witness_report) j["stored_witness"] = to_json(*c.witness_report);
  j["report"] = to_json(c.report);
  j["source_fingerprint"] = to_json(c.source_fingerprint);
  j["target_fingerprint"] = to_json(c.target_fingerprint);
  return j;
}

ojson to_json(const DualityGraph& g) {
  ojson j;
  ojson nodes = ojson::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    ojson n;
    n["id"] = i;
    n["f"] = g.nodes[i].f.poly.to_string();
    n["group"] = g.nodes[i].generator ? g.nodes[i].generator->to_string() : "id";
    n["label"] = g.nodes[i].label;
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  ojson edges = ojson::array();
  for (const auto& e : g.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"evidence", e.evidence}});
  j["edges"] = edges;
  j["components"] = g.components;
  j["component_sizes"] = g.component_sizes();
  return j;
}

}  // namespace oja
