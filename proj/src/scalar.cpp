#include "oja/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace oja {

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed rational '" + s + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("malformed rational '" + s + "'");
  };
  std::string num = s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  check_int(num);
  Integer p(num);
  Integer q(1);
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    check_int(den);
    q = Integer(den);
  }
  return make_rational(p, q);
}

namespace {

const std::vector<long>& cyclotomic_locked(unsigned n, std::map<unsigned, std::vector<long>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, by exact division by monic factors.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long> div = cyclotomic_locked(d, cache);
    const std::size_t dn = div.size() - 1;
    std::vector<long> quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
      long c = num[k];
      quot[k - dn] = c;
      for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(n, cache);
}

const NamedConstants& named_constants() {
  static_assert(CycScalar::kOrder % 24 == 0, "named constants need 24 | cyclotomic order");
  static const NamedConstants constants = [] {
    constexpr long s = CycScalar::kOrder / 24;
    NamedConstants c;
    c.i = CycScalar::zeta_power(6 * s);
    c.sqrt3 = CycScalar::zeta_power(2 * s) + CycScalar::zeta_power(22 * s);
    c.sqrt2 = CycScalar::zeta_power(3 * s) + CycScalar::zeta_power(21 * s);
    c.sqrt6 = c.sqrt2 * c.sqrt3;
    c.sqrt_minus6 = c.i * c.sqrt6;
    c.half_i = c.i.scaled(make_rational(1, 2));
    return c;
  }();
  return constants;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  CycScalar parse() {
    CycScalar value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  CycScalar expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    CycScalar value = term();
    if (negate) value = -value;
    for (;;) {
      skip_ws();
      char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      CycScalar rhs = term();
      value = op == '+' ? value + rhs : value - rhs;
    }
    return value;
  }

  CycScalar term() {
    CycScalar value = factor();
    for (;;) {
      skip_ws();
      char op = peek();
      if (op != '*' && op != '/') break;
      ++pos_;
      CycScalar rhs = factor();
      value = op == '*' ? value * rhs : value / rhs;
    }
    return value;
  }

  CycScalar factor() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      CycScalar value = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return CycScalar(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& nc = named_constants();
      if (name == "i") return nc.i;
      if (name == "sqrt2") return nc.sqrt2;
      if (name == "sqrt3") return nc.sqrt3;
      if (name == "sqrt6") return nc.sqrt6;
      if (name == "sqrt_minus6") return nc.sqrt_minus6;
      if (name == "half_i") return nc.half_i;
      if (name == "z") {
        skip_ws();
        long k = 1;
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          std::size_t s = pos_;
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          if (s == pos_) fail("expected exponent");
          k = std::stol(std::string(text_.substr(s, pos_ - s)));
        }
        return CycScalar::zeta_power(k);
      }
      pos_ = start;
      fail("unknown constant '" + name + "'");
    }
    fail("expected a number or constant");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scalar '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace oja
