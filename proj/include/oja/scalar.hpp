#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oja/rational.hpp"

#ifndef OJA_CYCLOTOMIC_ORDER
#define OJA_CYCLOTOMIC_ORDER 24
#endif

namespace oja {

constexpr unsigned euler_totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
///
/// Every arithmetic result is reduced modulo Phi_n immediately and every
/// coordinate is a canonical GMP rational, so equality is coordinate-wise.
template <unsigned Order>
class Cyclotomic {
 public:
  static constexpr unsigned kOrder = Order;
  static constexpr std::size_t kDegree = euler_totient(Order);
  using Coeffs = std::array<Rational, kDegree>;

  Cyclotomic() = default;
  explicit Cyclotomic(long value) { c_[0] = value; }
  explicit Cyclotomic(const Rational& value) { c_[0] = value; }
  explicit Cyclotomic(const Coeffs& coeffs) : c_(coeffs) {}

  static Cyclotomic from_rational(long p, long q) { return Cyclotomic(make_rational(p, q)); }

  /// zeta^k for any integer k.
  static Cyclotomic zeta_power(long k) {
    long e = k % static_cast<long>(Order);
    if (e < 0) e += Order;
    const auto& table = power_table();
    return table[static_cast<std::size_t>(e)];
  }

  /// e[a/r] = exp(2 pi i a / r); r must divide the field order.
  static Cyclotomic root_of_unity(long a, long r) {
    if (r <= 0 || Order % static_cast<unsigned long>(r) != 0)
      throw std::domain_error("root of unity of order " + std::to_string(r) +
                              " is not in Q(zeta_" + std::to_string(Order) + ")");
    return zeta_power(a * (static_cast<long>(Order) / r));
  }

  /// e[q] for a rational q whose denominator divides the field order.
  static Cyclotomic exp_2pi_i(const Rational& q) {
    Rational scaled = q * static_cast<long>(Order);
    if (!is_integer(scaled))
      throw std::domain_error("e[" + q.get_str() + "] is not in Q(zeta_" + std::to_string(Order) + ")");
    Integer k = scaled.get_num() % static_cast<long>(Order);
    return zeta_power(k.get_si());
  }

  const Coeffs& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t k = 1; k < kDegree; ++k)
      if (sgn(c_[k]) != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  const Rational& rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
    return c_[0];
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.c_)
      if (sgn(x) != 0) x = -x;
    return out;
  }
  Cyclotomic& operator+=(const Cyclotomic& o) {
    for (std::size_t k = 0; k < kDegree; ++k)
      if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    for (std::size_t k = 0; k < kDegree; ++k)
      if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) {
    *this = *this * o.inverse();
    return *this;
  }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.is_rational()) return a.scaled(b.c_[0]);
    if (a.is_rational()) return b.scaled(a.c_[0]);
    std::array<Rational, 2 * kDegree - 1> wide;
    for (std::size_t i = 0; i < kDegree; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < kDegree; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        wide[i + j] += a.c_[i] * b.c_[j];
      }
    }
    Cyclotomic out;
    for (std::size_t k = 0; k < kDegree; ++k) out.c_[k] = wide[k];
    const auto& red = reduction_table();
    for (std::size_t k = kDegree; k < 2 * kDegree - 1; ++k) {
      if (sgn(wide[k]) == 0) continue;
      const auto& row = red[k - kDegree];
      for (std::size_t j = 0; j < kDegree; ++j)
        if (row[j] != 0) out.c_[j] += wide[k] * row[j];
    }
    return out;
  }

  Cyclotomic scaled(const Rational& s) const {
    Cyclotomic out;
    if (sgn(s) == 0) return out;
    for (std::size_t k = 0; k < kDegree; ++k)
      if (sgn(c_[k]) != 0) out.c_[k] = c_[k] * s;
    return out;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_" + std::to_string(Order) + ")");
    if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
    using Upoly = std::vector<Rational>;
    auto trim = [](Upoly& p) {
      while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    };
    Upoly r0, r1(c_.begin(), c_.end());
    for (long v : cyclotomic_polynomial(Order)) r0.emplace_back(v);
    trim(r1);
    // Invariant: s_i * self == r_i (mod Phi).
    Upoly s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
      Upoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1);
      Upoly rem = r0;
      while (rem.size() >= r1.size() && !rem.empty()) {
        std::size_t shift = rem.size() - r1.size();
        Rational factor = rem.back() / r1.back();
        q[shift] = factor;
        for (std::size_t i = 0; i < r1.size(); ++i) rem[i + shift] -= factor * r1[i];
        rem.pop_back();
        trim(rem);
      }
      Upoly qs(q.size() + s1.size(), Rational(0));
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
      Upoly s2(std::max(s0.size(), qs.size()), Rational(0));
      for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
      if (r1.empty()) throw std::logic_error("Phi_n is irreducible; gcd cannot vanish");
    }
    Rational lead_inv = Rational(1) / r1[0];
    return reduce_upoly(s1).scaled(lead_inv);
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Image under the complex embedding zeta -> exp(2 pi i j / n).
  std::complex<long double> embed(unsigned j) const {
    std::complex<long double> acc = 0;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * j / Order;
    for (std::size_t k = 0; k < kDegree; ++k) {
      if (sgn(c_[k]) == 0) continue;
      long double v = static_cast<long double>(c_[k].get_d());
      acc += v * std::polar(1.0L, angle * static_cast<long double>(k));
    }
    return acc;
  }

  /// "p/q*z^k + ..." with z = zeta_n; "0" for zero.
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < kDegree; ++k) {
      const Rational& x = c_[k];
      if (sgn(x) == 0) continue;
      Rational mag = abs(x);
      if (out.empty()) {
        if (sgn(x) < 0) out += "-";
      } else {
        out += sgn(x) < 0 ? " - " : " + ";
      }
      if (k == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += "z";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

  std::vector<std::string> to_coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(kDegree);
    for (const auto& x : c_) out.push_back(to_fraction_string(x));
    return out;
  }

  static Cyclotomic from_coeff_strings(const std::vector<std::string>& parts) {
    if (parts.size() != kDegree)
      throw std::invalid_argument("expected " + std::to_string(kDegree) + " coordinates, got " +
                                  std::to_string(parts.size()));
    Cyclotomic out;
    for (std::size_t k = 0; k < kDegree; ++k) out.c_[k] = parse_rational(parts[k]);
    return out;
  }

 private:
  static Cyclotomic reduce_upoly(const std::vector<Rational>& p) {
    Cyclotomic out;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (sgn(p[k]) == 0) continue;
      out += power_table()[k % Order].scaled(p[k]);
    }
    return out;
  }

  // Row m holds t^(kDegree + m) reduced modulo Phi_n.
  static const std::vector<std::array<long, kDegree>>& reduction_table() {
    static const std::vector<std::array<long, kDegree>> table = [] {
      const auto& phi = cyclotomic_polynomial(Order);
      std::vector<std::array<long, kDegree>> rows;
      std::array<long, kDegree> cur{};
      for (std::size_t j = 0; j < kDegree; ++j) cur[j] = -phi[j];
      rows.push_back(cur);
      for (std::size_t m = 1; m + 1 < kDegree; ++m) {
        std::array<long, kDegree> next{};
        long top = cur[kDegree - 1];
        for (std::size_t j = kDegree - 1; j > 0; --j) next[j] = cur[j - 1];
        next[0] = 0;
        for (std::size_t j = 0; j < kDegree; ++j) next[j] -= top * phi[j];
        rows.push_back(next);
        cur = next;
      }
      return rows;
    }();
    return table;
  }

  static const std::vector<Cyclotomic>& power_table() {
    static const std::vector<Cyclotomic> table = [] {
      std::vector<Cyclotomic> powers;
      Cyclotomic cur(1);
      Cyclotomic zeta;
      if constexpr (kDegree > 1) {
        zeta.c_[1] = 1;
      } else {
        zeta.c_[0] = -cyclotomic_polynomial(Order)[0];
      }
      for (unsigned k = 0; k < Order; ++k) {
        powers.push_back(cur);
        cur = cur * zeta;
      }
      return powers;
    }();
    return table;
  }

  Coeffs c_{};
};

using CycScalar = Cyclotomic<OJA_CYCLOTOMIC_ORDER>;

/// The irrational constants the catalog maps need.
struct NamedConstants {
  CycScalar i;
  CycScalar sqrt2;
  CycScalar sqrt3;
  CycScalar sqrt6;
  CycScalar sqrt_minus6;
  CycScalar half_i;
};

const NamedConstants& named_constants();

/// Scalar expressions: sums, products, quotients and parentheses over unsigned
/// integers and the names i, sqrt2, sqrt3, sqrt6, sqrt_minus6, half_i, z (zeta_n)
/// and z^k. Accepts the output of to_string. Example: "-1/2*i", "1/sqrt_minus6".
CycScalar parse_scalar(std::string_view text);

}  // namespace oja
