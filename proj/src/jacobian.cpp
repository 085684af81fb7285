#include "oja/jacobian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oja {

long WeightSystem::socle_weight() const {
  long s = 0;
  for (long wi : w) s += d - 2 * wi;
  return s;
}

WeightSystem WeightSystem::restricted(const std::vector<int>& fixed) const {
  WeightSystem out;
  out.d = d;
  for (int k : fixed) out.w.push_back(w[k]);
  return out;
}

std::optional<WeightSystem> find_weights(const Poly& f) {
  std::size_t n = f.arity();
  if (n == 0) return WeightSystem{};
  if (f.is_zero()) return std::nullopt;
  std::vector<std::vector<Rational>> rows;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Rational> row;
    for (int e : m) row.emplace_back(e);
    row.emplace_back(-1);
    rows.push_back(std::move(row));
  }
  auto kernel = null_space(rows, n + 1);
  if (kernel.size() != 1) return std::nullopt;
  auto& v = kernel[0];
  if (sgn(v[n]) == 0) return std::nullopt;
  Integer den = 1;
  std::vector<Rational> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = v[i] / v[n];
    if (sgn(w[i]) <= 0) return std::nullopt;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w[i].get_den_mpz_t());
  }
  WeightSystem out;
  out.d = to_long(den);
  for (std::size_t i = 0; i < n; ++i) {
    Rational scaled = w[i] * Rational(den);
    out.w.push_back(to_long(scaled.get_num()));
  }
  return out;
}

GroebnerBasis jacobian_ideal_basis(const Poly& f) {
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < f.arity(); ++i) partials.push_back(f.derivative(i));
  GroebnerBasis gb = groebner(partials, Order::Grevlex);
  gb.vars = f.vars();
  return gb;
}

std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb, std::size_t arity) {
  std::vector<int> bound(arity, -1);
  for (const auto& lm : gb.leading) {
    int nonzero = 0;
    std::size_t which = 0;
    for (std::size_t k = 0; k < lm.size(); ++k)
      if (lm[k] > 0) {
        ++nonzero;
        which = k;
      }
    if (nonzero == 0) return std::vector<Monomial>{};
    if (nonzero == 1 && (bound[which] < 0 || lm[which] < bound[which])) bound[which] = lm[which];
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;
  std::vector<Monomial> out;
  Monomial cur(arity, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == arity) {
      for (const auto& lm : gb.leading)
        if (divides(lm, cur)) return;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[k]; ++e) {
      cur[k] = e;
      walk(k + 1);
    }
    cur[k] = 0;
  };
  walk(0);
  std::sort(out.begin(), out.end(), MonomialOrder{Order::Grevlex});
  return out;
}

std::size_t milnor(const Poly& f) {
  auto basis = standard_monomials(jacobian_ideal_basis(f), f.arity());
  if (!basis) throw std::domain_error("Jacobian algebra of " + f.to_string() + " is infinite-dimensional");
  return basis->size();
}

QuotientAlgebra QuotientAlgebra::build(const Poly& f, const WeightSystem& weights) {
  if (weights.w.size() != f.arity()) throw std::invalid_argument("weight count does not match arity");
  if (!is_weighted_homogeneous(f, weights.w, weights.d))
    throw std::invalid_argument(f.to_string() + " is not weighted homogeneous for the given weights");
  QuotientAlgebra a;
  a.f_ = f;
  a.weights_ = weights;
  a.gb_ = jacobian_ideal_basis(f);
  a.reducer_ = Reducer(a.gb_);
  auto basis = standard_monomials(a.gb_, f.arity());
  if (!basis || basis->empty())
    throw std::domain_error("Jacobian algebra of " + f.to_string() + " is infinite-dimensional");
  a.basis_ = std::move(*basis);

  long top = weights.socle_weight();
  std::vector<std::size_t> top_indices;
  for (std::size_t k = 0; k < a.basis_.size(); ++k)
    if (weighted_degree(a.basis_[k], weights.w) == top) top_indices.push_back(k);
  if (top_indices.size() != 1)
    throw std::runtime_error("socle of Jac(" + f.to_string() + ") is not one-dimensional in top degree");
  a.socle_index_ = top_indices[0];

  a.hessian_ = a.normal_form(oja::hessian(f));
  if (a.hessian_.num_terms() != 1 || a.hessian_.terms().begin()->first != a.socle())
    throw std::runtime_error("[hess f] is not a nonzero multiple of the socle monomial");
  a.hess_coeff_ = a.hessian_.terms().begin()->second;
  return a;
}

std::optional<std::size_t> QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), m, MonomialOrder{Order::Grevlex});
  if (it == basis_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

Poly QuotientAlgebra::normal_form(const Poly& p) const {
  if (p.arity() != arity()) throw std::invalid_argument("normal_form: polynomial over a different ring");
  Poly r = reducer_(p);
  return r.renamed(vars());
}

Vec QuotientAlgebra::coordinates(const Poly& p) const {
  Vec v(mu());
  Poly nf = normal_form(p);
  for (const auto& [m, c] : nf.terms()) {
    auto k = index_of(m);
    if (!k) throw std::logic_error("normal form left the standard-monomial basis");
    v[*k] = c;
  }
  return v;
}

Poly QuotientAlgebra::from_coordinates(const Vec& v) const {
  Poly out(vars());
  for (std::size_t k = 0; k < v.size(); ++k) out.add_term(basis_[k], v[k]);
  return out;
}

Poly QuotientAlgebra::basis_poly(std::size_t k) const { return Poly::monomial(vars(), basis_[k]); }

CycScalar QuotientAlgebra::trace_at_socle(const Rational& scale) const {
  return CycScalar(scale) / hess_coeff_;
}

Vec QuotientAlgebra::trace_functional(const Rational& scale) const {
  Vec v(mu());
  v[socle_index_] = trace_at_socle(scale);
  return v;
}

std::optional<QuotientAlgebra::Solution> QuotientAlgebra::solve(const Poly& a, const Poly& b,
                                                                const std::optional<std::vector<int>>& support) const {
  std::vector<Monomial> candidates;
  if (!support) {
    candidates = basis_;
  } else {
    long top = weights_.socle_weight();
    Monomial cur(arity(), 0);
    std::vector<int> vars_in = *support;
    std::function<void(std::size_t, long)> walk = [&](std::size_t k, long used) {
      if (k == vars_in.size()) {
        candidates.push_back(cur);
        return;
      }
      int v = vars_in[k];
      for (int e = 0; used + e * weights_.w[v] <= top; ++e) {
        cur[v] = e;
        walk(k + 1, used + e * weights_.w[v]);
      }
      cur[v] = 0;
    };
    walk(0, 0);
    std::sort(candidates.begin(), candidates.end(), MonomialOrder{Order::Grevlex});
  }

  // keep monomials whose classes are independent
  std::vector<Monomial> span;
  std::vector<Vec> span_coords;
  for (const auto& m : candidates) {
    Vec c = coordinates(Poly::monomial(vars(), m));
    if (is_zero_vec(c)) continue;
    auto trial = span_coords;
    trial.push_back(c);
    if (rank_of(trial) == trial.size()) {
      span.push_back(m);
      span_coords.push_back(std::move(c));
    }
  }

  std::size_t k = span.size();
  Matrix m(mu(), Vec(k));
  for (std::size_t j = 0; j < k; ++j) {
    Vec col = coordinates(a * Poly::monomial(vars(), span[j]));
    for (std::size_t i = 0; i < mu(); ++i) m[i][j] = col[i];
  }
  auto sol = solve_linear(m, coordinates(b), k);
  if (!sol) return std::nullopt;
  Solution out;
  out.h = Poly(vars());
  for (std::size_t j = 0; j < k; ++j) out.h.add_term(span[j], sol->first[j]);
  out.unique = sol->second;
  return out;
}

}  // namespace oja
