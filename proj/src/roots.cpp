#include "oja/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace oja {

void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly upoly_derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * CycScalar(static_cast<long>(k)));
  upoly_trim(d);
  return d;
}

namespace {

std::pair<UPoly, UPoly> divmod(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  CycScalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    CycScalar c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    a.pop_back();
    upoly_trim(a);
  }
  upoly_trim(q);
  return {q, a};
}

using Complex = std::complex<double>;

using LComplex = std::complex<long double>;

std::vector<LComplex> numeric_roots(const UPoly& p) {
  std::size_t n = p.size() - 1;
  std::vector<LComplex> c(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) c[k] = p[k].embed(1);
  using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  auto dim = static_cast<Eigen::Index>(n);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Eigen::Index k = 1; k < dim; ++k) m(k, k - 1) = 1;
  for (std::size_t k = 0; k < n; ++k) m(static_cast<Eigen::Index>(k), dim - 1) = Complex(-c[k] / c[n]);
  Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
  std::vector<LComplex> out;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    LComplex z(solver.eigenvalues()[k].real(), solver.eigenvalues()[k].imag());
    for (int step = 0; step < 8; ++step) {
      LComplex v = 0, d = 0;
      for (std::size_t j = n + 1; j-- > 0;) {
        d = d * z + v;
        v = v * z + c[j];
      }
      if (std::abs(d) == 0) break;
      z -= v / d;
    }
    out.push_back(z);
  }
  return out;
}

// LLL reduction (delta = 3/4) of integer row vectors held exactly in long double.
void lll(std::vector<std::vector<long double>>& b) {
  std::size_t n = b.size(), m = b[0].size();
  std::vector<std::vector<long double>> bs(n, std::vector<long double>(m)), mu(n, std::vector<long double>(n));
  std::vector<long double> norm(n);
  auto dot = [m](const std::vector<long double>& x, const std::vector<long double>& y) {
    long double s = 0;
    for (std::size_t k = 0; k < m; ++k) s += x[k] * y[k];
    return s;
  };
  auto gso = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      bs[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = norm[j] == 0 ? 0 : dot(b[i], bs[j]) / norm[j];
        for (std::size_t k = 0; k < m; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
      }
      norm[i] = dot(bs[i], bs[i]);
    }
  };
  gso();
  std::size_t k = 1;
  for (int guard = 0; k < n && guard < 100000; ++guard) {
    for (std::size_t j = k; j-- > 0;) {
      long double q = std::round(mu[k][j]);
      if (q == 0) continue;
      for (std::size_t t = 0; t < m; ++t) b[k][t] -= q * b[j][t];
      for (std::size_t t = 0; t < j; ++t) mu[k][t] -= q * mu[j][t];
      mu[k][j] -= q;
    }
    if (norm[k] >= (0.75L - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gso();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// Field elements whose first embedding is close to z, from short integer relations
// q z = sum p_k zeta^k.
std::vector<CycScalar> recognize(const LComplex& z) {
  constexpr unsigned n = CycScalar::kOrder;
  constexpr std::size_t deg = CycScalar::kDegree;
  const long double scale = std::ldexp(1.0L, 48);
  const long double tau = 2.0L * std::numbers::pi_v<long double> / n;
  std::vector<std::vector<long double>> b(deg + 1, std::vector<long double>(deg + 3, 0));
  for (std::size_t k = 0; k <= deg; ++k) {
    b[k][k] = 1;
    LComplex v = k < deg ? std::polar(1.0L, tau * static_cast<long double>(k)) : -z;
    b[k][deg + 1] = std::round(scale * v.real());
    b[k][deg + 2] = std::round(scale * v.imag());
  }
  lll(b);
  std::vector<CycScalar> out;
  for (const auto& row : b) {
    long double q = row[deg];
    if (q == 0 || std::fabs(row[deg + 1]) > 64 || std::fabs(row[deg + 2]) > 64) continue;
    CycScalar::Coeffs coeffs;
    for (std::size_t k = 0; k < deg; ++k) coeffs[k] = make_rational(static_cast<long>(row[k]), 1);
    out.push_back(CycScalar(coeffs) * CycScalar(make_rational(1, static_cast<long>(q))));
  }
  return out;
}

}  // namespace

UPoly upoly_rem(UPoly a, const UPoly& b) { return divmod(std::move(a), b).second; }
UPoly upoly_quot(UPoly a, const UPoly& b) { return divmod(std::move(a), b).first; }

UPoly upoly_gcd(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  CycScalar inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

CycScalar upoly_eval(const UPoly& p, const CycScalar& x) {
  CycScalar acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

std::vector<CycScalar> roots_in_field(const UPoly& input) {
  UPoly p = input;
  upoly_trim(p);
  if (p.size() <= 1) return {};
  UPoly g = upoly_gcd(p, upoly_derivative(p));
  if (g.size() > 1) p = upoly_quot(p, g);
  std::vector<CycScalar> out;
  auto add = [&](const CycScalar& r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  // factor out x^k
  if (p[0].is_zero()) {
    add(CycScalar());
    std::size_t k = 0;
    while (p[k].is_zero()) ++k;
    p.erase(p.begin(), p.begin() + static_cast<long>(k));
  }
  if (p.size() == 2) {
    add(-p[0] / p[1]);
    return out;
  }
  if (p.size() <= 1) return out;

  for (const auto& r : numeric_roots(p))
    for (const auto& cand : recognize(r))
      if (upoly_eval(p, cand).is_zero()) add(cand);
  std::sort(out.begin(), out.end(), [](const CycScalar& x, const CycScalar& y) {
    return x.to_coeff_strings() < y.to_coeff_strings();
  });
  return out;
}

}  // namespace oja
