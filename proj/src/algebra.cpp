#include "oja/algebra.hpp"

#include <stdexcept>

namespace oja {

Vec FiniteAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v[i] = CycScalar(1);
  return v;
}

Vec FiniteAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      CycScalar c = a[i] * b[j];
      const Vec& e = mult[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!e[k].is_zero()) out[k] += c * e[k];
    }
  }
  return out;
}

Vec FiniteAlgebra::power(const Vec& a, unsigned e) const {
  Vec out = unit;
  for (unsigned k = 0; k < e; ++k) out = multiply(out, a);
  return out;
}

CycScalar FiniteAlgebra::apply_trace(const Vec& a) const {
  CycScalar s;
  for (std::size_t k = 0; k < dim(); ++k)
    if (!a[k].is_zero() && !trace[k].is_zero()) s += a[k] * trace[k];
  return s;
}

Matrix FiniteAlgebra::gram() const {
  Matrix g(dim(), Vec(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g[i][j] = apply_trace(mult[i][j]);
  return g;
}

std::string FiniteAlgebra::element_string(const Vec& v) const {
  std::string out;
  for (std::size_t k = 0; k < dim(); ++k) {
    if (v[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!v[k].is_one()) {
      std::string c = v[k].to_string();
      out += v[k].is_rational() ? c + "*" : "(" + c + ")*";
    }
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

FiniteAlgebra to_finite_algebra(const QuotientAlgebra& a, const Rational& scale) {
  FiniteAlgebra out;
  std::size_t n = a.mu();
  for (std::size_t i = 0; i < n; ++i) {
    std::string m = monomial_string(a.basis()[i], a.vars());
    out.labels.push_back(m.empty() ? "[1]" : "[" + m + "]");
    out.degrees.push_back(a.weights().degree(a.basis()[i]));
    out.parities.push_back(0);
  }
  out.mult.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      out.mult[i][j] = a.coordinates(a.basis_poly(i) * a.basis_poly(j));
      out.mult[j][i] = out.mult[i][j];
    }
  out.unit = a.coordinates(Poly::constant(a.vars(), CycScalar(1)));
  out.trace = a.trace_functional(scale);
  return out;
}

Vec evaluate(const FiniteAlgebra& a, const Poly& p, const std::vector<Vec>& images) {
  if (images.size() != p.arity()) throw std::invalid_argument("evaluate: image count does not match arity");
  Vec out(a.dim());
  for (const auto& [m, c] : p.terms()) {
    Vec term = a.unit;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k] > 0) term = a.multiply(term, a.power(images[k], static_cast<unsigned>(m[k])));
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!term[k].is_zero()) out[k] += c * term[k];
  }
  return out;
}

std::string Fingerprint::to_string() const {
  std::string out = "dim=" + std::to_string(dim) + " m^k=(";
  for (std::size_t k = 0; k < power_dims.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(power_dims[k]);
  }
  return out + ") socle=" + std::to_string(socle_dim);
}

Fingerprint fingerprint(const FiniteAlgebra& a) {
  Fingerprint fp;
  fp.dim = a.dim();
  std::vector<Vec> m;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (sgn(a.degrees[k]) > 0) m.push_back(a.basis_vector(k));
  fp.power_dims.push_back(a.dim());
  std::vector<Vec> cur = m;
  while (true) {
    auto ech = row_reduce(cur, a.dim());
    cur = std::move(ech.rows);
    fp.power_dims.push_back(cur.size());
    if (cur.empty()) break;
    std::vector<Vec> next;
    for (const auto& x : cur)
      for (const auto& y : m) next.push_back(a.multiply(x, y));
    cur = std::move(next);
  }
  // socle = {x : x*y = 0 for all y in m}
  Matrix rows;
  for (const auto& y : m) {
    std::vector<Vec> prod;
    for (std::size_t i = 0; i < a.dim(); ++i) prod.push_back(a.multiply(a.basis_vector(i), y));
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Vec row(a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) row[i] = prod[i][k];
      rows.push_back(std::move(row));
    }
  }
  fp.socle_dim = rows.empty() ? a.dim() : null_space(rows, a.dim()).size();
  return fp;
}

}  // namespace oja
