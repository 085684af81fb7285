#include "oja/linalg.hpp"

#include <algorithm>

namespace oja {

Rational determinant(std::vector<std::vector<Rational>> a) {
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // move a nonzero entry of least magnitude to (t,t), then clear its row and column
    for (;;) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
  }
  std::vector<Integer> d;
  for (std::size_t k = 0; k < n; ++k) d.push_back(abs(a[k][k]));
  return d;
}

}  // namespace oja
