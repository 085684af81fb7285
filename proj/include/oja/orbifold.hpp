#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oja/algebra.hpp"
#include "oja/jacobian.hpp"
#include "oja/symmetry.hpp"

namespace oja {

/// Jac(f^g) v_g for g = generator^power.
struct Sector {
  GroupElement g;
  long power = 0;
  std::vector<int> fixed;
  Poly f_g;
  QuotientAlgebra algebra;
  int parity = 0;
  /// Indices into algebra.basis() that survive in the chosen algebra.
  std::vector<std::size_t> kept;
};

struct OrbifoldBasisElement {
  std::size_t sector = 0;
  std::size_t local = 0;
  std::string label;
};

bool fix_union_holds(const GroupElement& g, const GroupElement& h);

/// det of the second partials of f over the given coordinates; 1 for none.
Poly partial_hessian(const Poly& f, const std::vector<int>& indices);

/// Sign (-1)^{k(k-1)/2} e[-age(g)/2] with k = N - N_g.
CycScalar product_prefactor(const GroupElement& g);

class OrbifoldAlgebra {
 public:
  /// Jac(f, <generator>), or Jac'(f, <generator>) when invariant_only is false.
  /// No generator means the trivial group.
  static OrbifoldAlgebra build(const InvertiblePoly& f, const std::optional<GroupElement>& generator,
                               bool invariant_only = true);

  const InvertiblePoly& f() const { return f_; }
  const SymmetryGroup& group() const { return group_; }
  const std::optional<GroupElement>& generator() const { return generator_; }
  bool invariant_only() const { return invariant_only_; }
  const std::vector<Sector>& sectors() const { return sectors_; }
  const std::vector<OrbifoldBasisElement>& basis() const { return basis_; }
  const FiniteAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return basis_.size(); }

  /// Sector index of generator^power.
  std::size_t sector_of_power(long power) const;
  /// [p] v_{g^power} for p in the ambient variables, in basis coordinates.
  Vec element(long power, const Poly& p) const;
  /// H_{g,h} as a polynomial in the variables of Fix(gh).
  const Poly& h_class(std::size_t a, std::size_t b) const;
  /// Product [phi]v_g o [psi]v_h for sector-local representatives,
  /// as a polynomial in the variables of the target sector.
  std::optional<std::pair<std::size_t, Poly>> sector_product(std::size_t a, const Poly& phi, std::size_t b,
                                                             const Poly& psi) const;

  /// Basis index of the class of the socle monomial in the identity sector.
  std::size_t identity_socle_index() const;

 private:
  InvertiblePoly f_;
  SymmetryGroup group_;
  std::optional<GroupElement> generator_;
  bool invariant_only_ = true;
  std::vector<Sector> sectors_;
  std::map<std::pair<std::size_t, std::size_t>, Poly> h_;
  std::vector<OrbifoldBasisElement> basis_;
  FiniteAlgebra algebra_;

  Poly compute_h(std::size_t a, std::size_t b) const;
};

std::string sector_name(long power);

}  // namespace oja
