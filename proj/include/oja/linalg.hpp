#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oja/scalar.hpp"

namespace oja {

using Vec = std::vector<CycScalar>;
using Matrix = std::vector<Vec>;

inline bool field_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool field_is_zero(const CycScalar& x) { return x.is_zero(); }
inline Rational field_inverse(const Rational& x) { return Rational(1) / x; }
inline CycScalar field_inverse(const CycScalar& x) { return x.inverse(); }

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Row echelon data of a matrix over a field.
template <class F>
struct Echelon {
  std::vector<std::vector<F>> rows;  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<F> row_reduce(std::vector<std::vector<F>> a, std::size_t cols) {
  Echelon<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && field_is_zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    F inv = field_inverse(a[r][c]);
    for (std::size_t j = c; j < cols; ++j)
      if (!field_is_zero(a[r][j])) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || field_is_zero(a[i][c])) continue;
      F factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!field_is_zero(a[r][j])) a[i][j] -= factor * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

template <class F>
std::size_t rank_of(const std::vector<std::vector<F>>& a) {
  if (a.empty()) return 0;
  return row_reduce(a, a[0].size()).rank();
}

/// Solves A x = b. Returns nullopt when inconsistent; otherwise a particular
/// solution (free variables set to zero) and whether it is unique.
template <class F>
std::optional<std::pair<std::vector<F>, bool>> solve_linear(const std::vector<std::vector<F>>& a,
                                                            const std::vector<F>& b, std::size_t cols) {
  std::vector<std::vector<F>> aug;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = a[i];
    row.resize(cols);
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  auto ech = row_reduce(std::move(aug), cols + 1);
  std::vector<F> x(cols);
  for (std::size_t k = 0; k < ech.rank(); ++k) {
    if (ech.pivots[k] == cols) return std::nullopt;
    x[ech.pivots[k]] = ech.rows[k][cols];
  }
  return std::make_pair(std::move(x), ech.rank() == cols);
}

/// Basis of the null space of A (columns `cols`).
template <class F>
std::vector<std::vector<F>> null_space(const std::vector<std::vector<F>>& a, std::size_t cols) {
  auto ech = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols);
    v[free] = F(1);
    for (std::size_t k = 0; k < ech.rank(); ++k) v[ech.pivots[k]] = -ech.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse of a square matrix; throws if singular.
template <class F>
std::vector<std::vector<F>> inverse_of(const std::vector<std::vector<F>>& a) {
  std::size_t n = a.size();
  if (n == 0) return {};
  std::vector<std::vector<F>> aug;
  for (std::size_t i = 0; i < n; ++i) {
    auto row = a[i];
    row.resize(2 * n);
    row[n + i] = F(1);
    aug.push_back(std::move(row));
  }
  auto ech = row_reduce(std::move(aug), 2 * n);
  if (ech.rank() < n || ech.pivots[n - 1] >= n) throw std::domain_error("singular matrix");
  std::vector<std::vector<F>> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(ech.rows[i].begin() + n, ech.rows[i].end());
  return inv;
}

Rational determinant(std::vector<std::vector<Rational>> a);

/// Diagonal of the Smith normal form of an integer matrix (invariant factors,
/// zeros included, each dividing the next).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a);

}  // namespace oja
