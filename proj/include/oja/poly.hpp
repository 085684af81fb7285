#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "oja/scalar.hpp"

namespace oja {

using Monomial = std::vector<int>;

enum class Order { Grevlex, Lex };

int total_degree(const Monomial& m);

/// Strict ordering of exponent vectors of equal length.
/// Grevlex: total degree first, ties broken by the smallest exponent in the
/// last differing variable. Lex: first differing variable decides.
struct MonomialOrder {
  Order kind = Order::Grevlex;
  bool operator()(const Monomial& a, const Monomial& b) const;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator+(const Monomial& a, const Monomial& b);
/// a - b; requires divides(b, a).
Monomial operator-(const Monomial& a, const Monomial& b);

/// Sum of w_i * m_i.
Rational weighted_degree(const Monomial& m, const std::vector<long>& weights);

class Poly {
 public:
  using Terms = std::map<Monomial, CycScalar, MonomialOrder>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars);

  static Poly constant(std::vector<std::string> vars, const CycScalar& c);
  static Poly monomial(std::vector<std::string> vars, Monomial m, const CycScalar& c = CycScalar(1));
  static Poly variable(std::vector<std::string> vars, std::size_t i);

  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  CycScalar coeff(const Monomial& m) const;
  int total_degree() const;

  /// Largest term under grevlex. Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const CycScalar& leading_coeff() const;

  void add_term(const Monomial& m, const CycScalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const CycScalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const CycScalar& c) { return a *= c; }
  friend Poly operator*(const CycScalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_ && a.arity() == b.arity(); }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t i) const;

  /// Same terms over different variable names of equal count.
  Poly renamed(std::vector<std::string> vars) const;
  /// Applies the variable permutation x_i -> x_{perm[i]}.
  Poly permuted(const std::vector<int>& perm) const;

  /// Substitutes images[i] for the i-th variable; images share one ring.
  Poly compose(const std::vector<Poly>& images) const;

  std::string to_string() const;

 private:
  void check_compatible(const Poly& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

std::vector<std::string> default_vars(std::size_t n);

/// "x1^2*x3"; empty for the constant monomial.
std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars);

/// Parses the grammar
///   poly := term (('+'|'-') term)* ; term := [coeff '*'?] factor ('*' factor)*
///   factor := var ('^' uint)? ; coeff := uint
/// over the declared variables. For variables x1,x2,x3 (or a prefix) the
/// names x,y,z are accepted as aliases. A bare coefficient is read as a constant term.
Poly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Variables x1..xN inferred from the identifiers in text: xk contributes k,
/// x/y/z contribute 1/2/3.
std::vector<std::string> infer_vars(std::string_view text);

std::vector<std::vector<Poly>> hessian_matrix(const Poly& f);
Poly determinant_cofactor(const std::vector<std::vector<Poly>>& m, const std::vector<std::string>& vars);
Poly determinant_bareiss(std::vector<std::vector<Poly>> m, const std::vector<std::string>& vars);
/// Exact quotient a / b; throws if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);

/// det of the matrix of second partials; the constant 1 for arity 0.
Poly hessian(const Poly& f);

struct Restriction {
  Poly poly;
  /// embedding[k] is the ambient index of the k-th surviving variable.
  std::vector<int> embedding;
};

/// Sets every variable outside `fixed` to zero and drops it.
Restriction restrict_to(const Poly& f, const std::vector<int>& fixed);

/// Re-embeds p (over the variables of a restriction) into the ambient ring.
Poly lift(const Poly& p, const std::vector<int>& embedding, const std::vector<std::string>& ambient_vars);

bool is_weighted_homogeneous(const Poly& f, const std::vector<long>& weights, long d);

}  // namespace oja
