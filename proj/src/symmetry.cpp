#include "oja/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oja {

GroupElement::GroupElement(std::vector<Rational> phases) : phases_(std::move(phases)) {
  for (auto& p : phases_) p = frac(p);
}

GroupElement GroupElement::identity(std::size_t n) { return GroupElement(std::vector<Rational>(n)); }

GroupElement GroupElement::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), s.end());
  if (s.empty()) throw std::invalid_argument("empty group element");
  std::vector<Rational> phases;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    phases.push_back(parse_rational(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return GroupElement(std::move(phases));
}

bool GroupElement::is_identity() const {
  return std::all_of(phases_.begin(), phases_.end(), [](const Rational& p) { return sgn(p) == 0; });
}

long GroupElement::order() const {
  Integer r = 1;
  for (const auto& p : phases_) mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), p.get_den_mpz_t());
  return to_long(r);
}

Rational GroupElement::age() const {
  Rational s = 0;
  for (const auto& p : phases_) s += p;
  return s;
}

std::vector<int> GroupElement::fixed_indices() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < phases_.size(); ++k)
    if (sgn(phases_[k]) == 0) out.push_back(static_cast<int>(k));
  return out;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (arity() != o.arity()) throw std::invalid_argument("group elements of different arity");
  std::vector<Rational> p(arity());
  for (std::size_t k = 0; k < arity(); ++k) p[k] = phases_[k] + o.phases_[k];
  return GroupElement(std::move(p));
}

GroupElement GroupElement::inverse() const {
  std::vector<Rational> p(arity());
  for (std::size_t k = 0; k < arity(); ++k) p[k] = -phases_[k];
  return GroupElement(std::move(p));
}

GroupElement GroupElement::pow(long k) const {
  std::vector<Rational> p(arity());
  for (std::size_t i = 0; i < arity(); ++i) p[i] = phases_[i] * k;
  return GroupElement(std::move(p));
}

GroupElement GroupElement::permuted(const std::vector<int>& perm) const {
  std::vector<Rational> p(arity());
  for (std::size_t k = 0; k < arity(); ++k) p[perm[k]] = phases_[k];
  return GroupElement(std::move(p));
}

std::string GroupElement::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < phases_.size(); ++k) {
    if (k) out += ",";
    out += phases_[k].get_str();
  }
  return out;
}

std::vector<std::string> GroupElement::to_strings() const {
  std::vector<std::string> out;
  for (const auto& p : phases_) out.push_back(p.get_str());
  return out;
}

SymmetryGroup SymmetryGroup::generate(const std::vector<GroupElement>& gens, std::size_t arity) {
  SymmetryGroup g;
  g.arity_ = arity;
  std::set<GroupElement> seen{GroupElement::identity(arity)};
  std::vector<GroupElement> frontier{GroupElement::identity(arity)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        if (s.arity() != arity) throw std::invalid_argument("generator arity mismatch");
        GroupElement y = x * s;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  g.elements_.assign(seen.begin(), seen.end());
  // lexicographically largest generators first
  std::set<GroupElement> span_set{GroupElement::identity(arity)};
  for (auto it = g.elements_.rbegin(); it != g.elements_.rend(); ++it) {
    if (span_set.count(*it)) continue;
    g.generators_.push_back(*it);
    std::set<GroupElement> closure{GroupElement::identity(arity)};
    std::vector<GroupElement> todo{GroupElement::identity(arity)};
    while (!todo.empty()) {
      GroupElement x = todo.back();
      todo.pop_back();
      for (const auto& s : g.generators_) {
        GroupElement y = x * s;
        if (closure.insert(y).second) todo.push_back(y);
      }
    }
    span_set = std::move(closure);
  }
  return g;
}

bool SymmetryGroup::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

namespace {
bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}
}  // namespace

bool SymmetryGroup::is_cyclic_prime_or_trivial() const { return is_trivial() || is_prime(order()); }

long SymmetryGroup::exponent() const {
  long e = 1;
  for (const auto& g : elements_) e = std::lcm(e, g.order());
  return e;
}

SymmetryGroup SymmetryGroup::permuted(const std::vector<int>& perm) const {
  std::vector<GroupElement> gens;
  for (const auto& g : generators_) gens.push_back(g.permuted(perm));
  return generate(gens, arity_);
}

std::string SymmetryGroup::to_string() const {
  if (is_trivial()) return "{id}";
  std::string out = "<";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k) out += ", ";
    out += "(" + generators_[k].to_string() + ")";
  }
  return out + ">";
}

std::vector<std::vector<int>> all_permutations(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

InvertiblePoly make_invertible(const Poly& poly, std::vector<std::vector<long>> E, std::vector<CycScalar> coeffs) {
  std::size_t n = poly.arity();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = E[i][j];
  if (sgn(determinant(q)) == 0) throw std::invalid_argument(poly.to_string() + ": exponent matrix is singular");
  auto inv = inverse_of(q);
  std::vector<Rational> w(n);
  Integer den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i] += inv[i][j];
    if (sgn(w[i]) <= 0) throw std::invalid_argument(poly.to_string() + ": no positive weight system");
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w[i].get_den_mpz_t());
  }
  WeightSystem ws;
  ws.d = to_long(den);
  for (std::size_t i = 0; i < n; ++i) ws.w.push_back(to_long(Rational(w[i] * Rational(den)).get_num()));
  if (!standard_monomials(jacobian_ideal_basis(poly), n))
    throw std::invalid_argument(poly.to_string() + ": critical point at the origin is not isolated");
  return InvertiblePoly{poly, std::move(E), std::move(coeffs), std::move(ws)};
}

Poly poly_from_matrix(const std::vector<std::vector<long>>& E, const std::vector<CycScalar>& c,
                      const std::vector<std::string>& vars) {
  Poly out(vars);
  for (std::size_t i = 0; i < E.size(); ++i) {
    Monomial m(E[i].begin(), E[i].end());
    out.add_term(m, c[i]);
  }
  return out;
}

}  // namespace

InvertiblePoly build_invertible(const Poly& p) {
  std::size_t n = p.arity();
  if (p.is_zero()) throw std::invalid_argument("zero polynomial is not invertible");
  if (p.num_terms() != n)
    throw std::invalid_argument(p.to_string() + ": " + std::to_string(p.num_terms()) + " monomials in " +
                                std::to_string(n) + " variables");
  std::vector<Monomial> monos;
  std::vector<CycScalar> cs;
  for (const auto& [m, c] : p.terms()) {
    monos.push_back(m);
    cs.push_back(c);
  }
  std::vector<int> best;
  long best_score = -1;
  for (const auto& perm : all_permutations(n)) {
    long score = 1;
    for (std::size_t i = 0; i < n; ++i) score *= monos[perm[i]][i];
    if (score > best_score) {
      best_score = score;
      best = perm;
    }
  }
  std::vector<std::vector<long>> E(n);
  std::vector<CycScalar> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    E[i].assign(monos[best[i]].begin(), monos[best[i]].end());
    coeffs[i] = cs[best[i]];
  }
  InvertiblePoly f = make_invertible(p, std::move(E), std::move(coeffs));
  Poly t = poly_from_matrix([&] {
    std::vector<std::vector<long>> et(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) et[i][j] = f.E[j][i];
    return et;
  }(), f.coeffs, p.vars());
  if (!standard_monomials(jacobian_ideal_basis(t), n))
    throw std::invalid_argument(p.to_string() + ": transpose " + t.to_string() + " is degenerate");
  return f;
}

InvertiblePoly transpose(const InvertiblePoly& f) {
  std::size_t n = f.arity();
  std::vector<std::vector<long>> et(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) et[i][j] = f.E[j][i];
  Poly t = poly_from_matrix(et, f.coeffs, f.poly.vars());
  return make_invertible(t, std::move(et), f.coeffs);
}

SymmetryGroup max_symmetry_group(const InvertiblePoly& f) {
  std::size_t n = f.arity();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  std::vector<std::vector<Integer>> zi(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      q[i][j] = f.E[i][j];
      zi[i][j] = f.E[i][j];
    }
  auto inv = inverse_of(q);
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = inv[i][j];
    gens.emplace_back(std::move(col));
  }
  SymmetryGroup g = SymmetryGroup::generate(gens, n);

  Integer det = abs(determinant(q).get_num());
  auto snf = smith_diagonal(zi);
  Integer snf_order = 1;
  for (const auto& d : snf) snf_order *= d;
  if (Integer(static_cast<long>(g.order())) != det || snf_order != det ||
      (n > 0 && Integer(g.exponent()) != snf.back()))
    throw std::logic_error("G_f order check failed for " + f.poly.to_string());
  for (const auto& x : g.elements())
    if (!is_symmetry(f.poly, x)) throw std::logic_error("G_f element does not preserve " + f.poly.to_string());
  return g;
}

SymmetryGroup sl_subgroup(const SymmetryGroup& g) {
  std::vector<GroupElement> keep;
  for (const auto& x : g.elements())
    if (is_integer(x.age())) keep.push_back(x);
  return SymmetryGroup::generate(keep, g.arity());
}

Rational character_phase(const GroupElement& g, const Monomial& m) {
  Rational s = 0;
  for (std::size_t k = 0; k < m.size(); ++k) s += g.phases()[k] * m[k];
  return frac(s);
}

bool is_symmetry(const Poly& f, const GroupElement& g) {
  for (const auto& [m, c] : f.terms())
    if (sgn(character_phase(g, m)) != 0) return false;
  return true;
}

Poly act(const Poly& f, const GroupElement& g) {
  Poly out(f.vars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c * CycScalar::exp_2pi_i(character_phase(g, m)));
  return out;
}

std::optional<std::vector<int>> match_up_to_permutation(const Poly& a, const Poly& b) {
  if (a.arity() != b.arity() || a.num_terms() != b.num_terms()) return std::nullopt;
  Poly bb = b.renamed(a.vars());
  for (const auto& perm : all_permutations(a.arity()))
    if (a.permuted(perm) == bb) return perm;
  return std::nullopt;
}

}  // namespace oja
