#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oja/jacobian.hpp"
#include "oja/poly.hpp"

namespace oja {

/// Diagonal symmetry diag(e[a_1/r], ..., e[a_N/r]) stored as phases in [0,1).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Rational> phases);
  static GroupElement identity(std::size_t n);
  /// "a1/r,a2/r,...", optionally in parentheses.
  static GroupElement parse(std::string_view text);

  const std::vector<Rational>& phases() const { return phases_; }
  std::size_t arity() const { return phases_.size(); }
  bool is_identity() const;
  long order() const;
  Rational age() const;
  /// Indices with phase 0.
  std::vector<int> fixed_indices() const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(long k) const;
  GroupElement permuted(const std::vector<int>& perm) const;

  std::string to_string() const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.phases_ == b.phases_; }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.phases_ < b.phases_; }

 private:
  std::vector<Rational> phases_;
};

inline Rational age(const GroupElement& g) { return g.age(); }
inline std::vector<int> fixed_indices(const GroupElement& g) { return g.fixed_indices(); }

class SymmetryGroup {
 public:
  SymmetryGroup() = default;
  /// Closure of the generators under composition.
  static SymmetryGroup generate(const std::vector<GroupElement>& gens, std::size_t arity);
  static SymmetryGroup trivial(std::size_t arity) { return generate({}, arity); }

  /// Sorted, identity first.
  const std::vector<GroupElement>& elements() const { return elements_; }
  /// Lexicographically largest first; each not in the span of the earlier ones.
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t arity() const { return arity_; }
  bool contains(const GroupElement& g) const;
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_cyclic_prime_or_trivial() const;
  long exponent() const;
  SymmetryGroup permuted(const std::vector<int>& perm) const;
  std::string to_string() const;

 private:
  std::size_t arity_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
};

struct InvertiblePoly {
  Poly poly;
  /// Row i is the exponent vector of the monomial attached to variable i.
  std::vector<std::vector<long>> E;
  std::vector<CycScalar> coeffs;
  WeightSystem weights;

  std::size_t arity() const { return poly.arity(); }
};

/// Validates the invertibility conditions; rows of E are matched to variables
/// so that the product of the diagonal exponents is maximal.
InvertiblePoly build_invertible(const Poly& p);
/// Berglund-Huebsch transpose: exponent matrix E^T, same coefficients.
InvertiblePoly transpose(const InvertiblePoly& f);

/// G_f, generated by the columns of E^{-1} read as phases mod 1.
SymmetryGroup max_symmetry_group(const InvertiblePoly& f);
/// Elements with integral phase sum.
SymmetryGroup sl_subgroup(const SymmetryGroup& g);

/// Whether every monomial of f is fixed by g (sum m_i a_i/r integral).
bool is_symmetry(const Poly& f, const GroupElement& g);
/// f(g.x) computed in the coefficient field; requires ord(g) | field order.
Poly act(const Poly& f, const GroupElement& g);
/// Character value e[sum m_i phase_i] of g on a monomial, as a phase in [0,1).
Rational character_phase(const GroupElement& g, const Monomial& m);

/// perm with a.permuted(perm) == b (ignoring variable names), if any.
std::optional<std::vector<int>> match_up_to_permutation(const Poly& a, const Poly& b);

/// Permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(std::size_t n);

}  // namespace oja
