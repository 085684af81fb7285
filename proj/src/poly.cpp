#include "oja/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace oja {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (kind == Order::Lex) return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  int da = oja::total_degree(a), db = oja::total_degree(b);
  if (da != db) return da < db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

Monomial operator+(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Monomial operator-(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = a[k] - b[k];
    if (out[k] < 0) throw std::logic_error("monomial difference is not a monomial");
  }
  return out;
}

Rational weighted_degree(const Monomial& m, const std::vector<long>& weights) {
  Rational s = 0;
  for (std::size_t k = 0; k < m.size(); ++k) s += Rational(weights[k]) * m[k];
  return s;
}

Poly::Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Poly Poly::constant(std::vector<std::string> vars, const CycScalar& c) {
  Poly p(std::move(vars));
  p.add_term(Monomial(p.arity(), 0), c);
  return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Monomial m, const CycScalar& c) {
  Poly p(std::move(vars));
  if (m.size() != p.arity()) throw std::invalid_argument("monomial arity mismatch");
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(std::vector<std::string> vars, std::size_t i) {
  Monomial m(vars.size(), 0);
  if (i >= m.size()) throw std::out_of_range("variable index out of range");
  m[i] = 1;
  return monomial(std::move(vars), std::move(m));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && oja::total_degree(terms_.begin()->first) == 0);
}

CycScalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycScalar() : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, oja::total_degree(m));
  return d;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const CycScalar& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (arity() != o.arity())
    throw std::invalid_argument("polynomials over different rings (" + std::to_string(arity()) + " vs " +
                                std::to_string(o.arity()) + " variables)");
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly out(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(vars_, CycScalar(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t i) const {
  if (i >= arity()) throw std::out_of_range("derivative index " + std::to_string(i) + " out of range");
  Poly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial n = m;
    --n[i];
    out.add_term(n, c.scaled(Rational(m[i])));
  }
  return out;
}

Poly Poly::renamed(std::vector<std::string> vars) const {
  if (vars.size() != arity()) throw std::invalid_argument("rename changes arity");
  Poly out = *this;
  out.vars_ = std::move(vars);
  return out;
}

Poly Poly::permuted(const std::vector<int>& perm) const {
  Poly out(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial n(m.size(), 0);
    for (std::size_t k = 0; k < m.size(); ++k) n[perm[k]] = m[k];
    out.add_term(n, c);
  }
  return out;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  if (images.size() != arity()) throw std::invalid_argument("compose needs one image per variable");
  std::vector<std::string> target_vars = images.empty() ? std::vector<std::string>{} : images[0].vars();
  Poly out(target_vars);
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, CycScalar(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  for (const auto& [m, c] : terms_) {
    Poly t = constant(target_vars, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t *= power(i, m[i]);
    out += t;
  }
  return out;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[k];
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono = monomial_string(m, vars_);
    bool negative = c.is_rational() && sgn(c[0]) < 0;
    CycScalar mag = negative ? -c : c;
    std::string coef;
    if (!mag.is_one() || mono.empty()) {
      coef = mag.to_string();
      if (!mag.is_rational()) coef = "(" + coef + ")";
    }
    std::string term = coef;
    if (!mono.empty()) term += (coef.empty() ? "" : "*") + mono;
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::vector<std::string> default_vars(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back("x" + std::to_string(k));
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {
    aliases_ = !vars.empty() && vars.size() <= 3;
    for (std::size_t k = 0; k < vars.size() && aliases_; ++k) aliases_ = vars[k] == "x" + std::to_string(k + 1);
  }

  Poly parse() {
    Poly out(vars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Poly t = term();
      if (negative) t = -t;
      out += t;
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return out;
  }

 private:
  Poly term() {
    skip_ws();
    CycScalar coeff(1);
    Monomial m(vars_.size(), 0);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = CycScalar(Rational(read_uint()));
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        factor(m);
        have_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        factor(m);
        have_factor = true;
      }
    } else {
      factor(m);
      have_factor = true;
    }
    if (have_factor) {
      for (;;) {
        skip_ws();
        if (peek() != '*') break;
        ++pos_;
        skip_ws();
        factor(m);
      }
    }
    return Poly::monomial(vars_, m, coeff);
  }

  void factor(Monomial& m) {
    skip_ws();
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a variable");
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    std::size_t index = lookup(name, start);
    skip_ws();
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '-') fail("negative exponent");
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      Integer v = read_uint();
      if (!v.fits_sint_p()) fail("exponent too large");
      e = static_cast<int>(v.get_si());
    }
    m[index] += e;
  }

  std::size_t lookup(const std::string& name, std::size_t at) {
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (vars_[k] == name) return k;
    if (aliases_) {
      if (name == "x") return 0;
      if (name == "y" && vars_.size() > 1) return 1;
      if (name == "z" && vars_.size() > 2) return 2;
    }
    pos_ = at;
    fail("unknown variable '" + name + "'");
  }

  Integer read_uint() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  bool aliases_ = false;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars) { return PolyParser(text, vars).parse(); }

std::vector<std::string> infer_vars(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size();) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (!std::isalpha(ch)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    std::string_view id = text.substr(start, i - start);
    if (id == "x") n = std::max<std::size_t>(n, 1);
    else if (id == "y") n = std::max<std::size_t>(n, 2);
    else if (id == "z") n = std::max<std::size_t>(n, 3);
    else if (id.size() > 1 && id[0] == 'x' &&
             std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      n = std::max<std::size_t>(n, std::stoul(std::string(id.substr(1))));
    else
      throw std::invalid_argument("cannot infer variables from identifier '" + std::string(id) +
                                  "'; pass --vars");
  }
  if (n == 0) throw std::invalid_argument("no variables in polynomial");
  return default_vars(n);
}

std::vector<std::vector<Poly>> hessian_matrix(const Poly& f) {
  std::size_t n = f.arity();
  std::vector<Poly> first;
  for (std::size_t i = 0; i < n; ++i) first.push_back(f.derivative(i));
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = j < i ? m[j][i] : first[i].derivative(j);
  return m;
}

Poly determinant_cofactor(const std::vector<std::vector<Poly>>& m, const std::vector<std::string>& vars) {
  std::size_t n = m.size();
  if (n == 0) return Poly::constant(vars, CycScalar(1));
  if (n == 1) return m[0][0];
  Poly det(vars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * determinant_cofactor(minor, vars);
    if (col % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly rem = a;
  Poly quot(a.vars());
  const Monomial& lb = b.leading_monomial();
  CycScalar lc_inv = b.leading_coeff().inverse();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (!divides(lb, lr)) throw std::domain_error("inexact polynomial division");
    Poly q = Poly::monomial(a.vars(), lr - lb, rem.leading_coeff() * lc_inv);
    quot += q;
    rem -= q * b;
  }
  return quot;
}

Poly determinant_bareiss(std::vector<std::vector<Poly>> m, const std::vector<std::string>& vars) {
  std::size_t n = m.size();
  if (n == 0) return Poly::constant(vars, CycScalar(1));
  bool negate = false;
  Poly prev = Poly::constant(vars, CycScalar(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Poly(vars);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly(vars);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Poly hessian(const Poly& f) {
  auto m = hessian_matrix(f);
  if (f.arity() <= 4) return determinant_cofactor(m, f.vars());
  return determinant_bareiss(std::move(m), f.vars());
}

Restriction restrict_to(const Poly& f, const std::vector<int>& fixed) {
  std::vector<int> keep = fixed;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> names;
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= f.arity()) throw std::out_of_range("restriction index out of range");
    names.push_back(f.vars()[k]);
  }
  std::vector<bool> kept(f.arity(), false);
  for (int k : keep) kept[k] = true;
  Poly out(names);
  for (const auto& [m, c] : f.terms()) {
    bool vanishes = false;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (!kept[k] && m[k] > 0) vanishes = true;
    if (vanishes) continue;
    Monomial n;
    for (int k : keep) n.push_back(m[k]);
    out.add_term(n, c);
  }
  return {std::move(out), std::move(keep)};
}

Poly lift(const Poly& p, const std::vector<int>& embedding, const std::vector<std::string>& ambient_vars) {
  Poly out(ambient_vars);
  for (const auto& [m, c] : p.terms()) {
    Monomial n(ambient_vars.size(), 0);
    for (std::size_t k = 0; k < m.size(); ++k) n[embedding[k]] = m[k];
    out.add_term(n, c);
  }
  return out;
}

bool is_weighted_homogeneous(const Poly& f, const std::vector<long>& weights, long d) {
  for (const auto& [m, c] : f.terms())
    if (weighted_degree(m, weights) != d) return false;
  return true;
}

}  // namespace oja
