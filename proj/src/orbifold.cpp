#include "oja/orbifold.hpp"

#include <algorithm>
#include <stdexcept>

namespace oja {

bool fix_union_holds(const GroupElement& g, const GroupElement& h) {
  GroupElement gh = g * h;
  for (std::size_t i = 0; i < g.arity(); ++i)
    if (sgn(g.phases()[i]) != 0 && sgn(h.phases()[i]) != 0 && sgn(gh.phases()[i]) != 0) return false;
  return true;
}

CycScalar product_prefactor(const GroupElement& g) {
  long k = static_cast<long>(g.arity() - g.fixed_indices().size());
  CycScalar sign((k * (k - 1) / 2) % 2 == 0 ? 1 : -1);
  return sign * CycScalar::exp_2pi_i(-g.age() / 2);
}

std::string sector_name(long power) {
  if (power == 0) return "id";
  if (power == 1) return "g";
  return "g^" + std::to_string(power);
}

namespace {

std::vector<int> positions_in(const std::vector<int>& subset, const std::vector<int>& set) {
  std::vector<int> out;
  for (int k : subset) {
    auto it = std::lower_bound(set.begin(), set.end(), k);
    if (it == set.end() || *it != k) throw std::logic_error("index set is not contained in the fixed locus");
    out.push_back(static_cast<int>(it - set.begin()));
  }
  return out;
}

Rational sector_degree(const InvertiblePoly& f, const Sector& s, const Monomial& local) {
  const auto& w = f.weights;
  Rational deg = 0;
  for (std::size_t k = 0; k < local.size(); ++k) deg += w.q(static_cast<std::size_t>(s.fixed[k])) * local[k];
  std::vector<bool> fixed(f.arity(), false);
  for (int k : s.fixed) fixed[static_cast<std::size_t>(k)] = true;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!fixed[i]) deg += Rational(1, 2) - w.q(i);
  return deg;
}

}  // namespace

Poly partial_hessian(const Poly& f, const std::vector<int>& indices) {
  std::vector<std::vector<Poly>> m(indices.size(), std::vector<Poly>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      m[i][j] = f.derivative(static_cast<std::size_t>(indices[i])).derivative(static_cast<std::size_t>(indices[j]));
  if (indices.empty()) return Poly::constant(f.vars(), CycScalar(1));
  return determinant_cofactor(m, f.vars());
}

OrbifoldAlgebra OrbifoldAlgebra::build(const InvertiblePoly& f, const std::optional<GroupElement>& generator,
                                       bool invariant_only) {
  OrbifoldAlgebra a;
  a.f_ = f;
  a.invariant_only_ = invariant_only;
  std::size_t n = f.arity();
  if (generator && !generator->is_identity()) {
    if (generator->arity() != n) throw std::invalid_argument("group element has the wrong number of phases");
    if (!is_symmetry(f.poly, *generator))
      throw std::invalid_argument("(" + generator->to_string() + ") is not a symmetry of " + f.poly.to_string());
    if (!is_integer(generator->age()))
      throw std::invalid_argument("(" + generator->to_string() + ") is not in the SL subgroup");
    a.generator_ = generator;
    a.group_ = SymmetryGroup::generate({*generator}, n);
    if (!a.group_.is_cyclic_prime_or_trivial())
      throw std::invalid_argument("only trivial groups and cyclic groups of prime order are supported");
  } else {
    a.group_ = SymmetryGroup::trivial(n);
  }
  long r = static_cast<long>(a.group_.order());

  for (long k = 0; k < r; ++k) {
    Sector s;
    s.power = k;
    s.g = a.generator_ ? a.generator_->pow(k) : GroupElement::identity(n);
    s.fixed = s.g.fixed_indices();
    s.f_g = restrict_to(f.poly, s.fixed).poly;
    s.algebra = QuotientAlgebra::build(s.f_g, f.weights.restricted(s.fixed));
    s.parity = static_cast<int>((n - s.fixed.size()) % 2);
    for (std::size_t j = 0; j < s.algebra.mu(); ++j) {
      const Monomial& m = s.algebra.basis()[j];
      bool keep = true;
      if (invariant_only && a.generator_) {
        Rational phase = 0;
        for (std::size_t v = 0; v < m.size(); ++v) phase += a.generator_->phases()[s.fixed[v]] * m[v];
        keep = is_integer(phase);
      }
      if (keep) s.kept.push_back(j);
    }
    a.sectors_.push_back(std::move(s));
  }

  for (std::size_t i = 0; i < a.sectors_.size(); ++i)
    for (std::size_t j = 0; j < a.sectors_.size(); ++j)
      if (fix_union_holds(a.sectors_[i].g, a.sectors_[j].g)) a.h_[{i, j}] = a.compute_h(i, j);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  auto& alg = a.algebra_;
  for (std::size_t i = 0; i < a.sectors_.size(); ++i) {
    const Sector& s = a.sectors_[i];
    for (std::size_t j : s.kept) {
      const Monomial& m = s.algebra.basis()[j];
      std::string mono = monomial_string(m, s.algebra.vars());
      std::string label = (mono.empty() ? "" : "[" + mono + "]") + "v_" + sector_name(s.power);
      index[{i, j}] = a.basis_.size();
      a.basis_.push_back({i, j, label});
      alg.labels.push_back(label);
      alg.degrees.push_back(sector_degree(f, s, m));
      alg.parities.push_back(s.parity);
    }
  }

  std::size_t dim = a.basis_.size();
  alg.mult.assign(dim, std::vector<Vec>(dim, Vec(dim)));
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      const auto& bx = a.basis_[x];
      const auto& by = a.basis_[y];
      auto prod = a.sector_product(bx.sector, a.sectors_[bx.sector].algebra.basis_poly(bx.local), by.sector,
                                   a.sectors_[by.sector].algebra.basis_poly(by.local));
      if (!prod) continue;
      Vec local = a.sectors_[prod->first].algebra.coordinates(prod->second);
      for (std::size_t j = 0; j < local.size(); ++j) {
        if (local[j].is_zero()) continue;
        auto it = index.find({prod->first, j});
        if (it == index.end())
          throw std::logic_error("product " + a.basis_[x].label + " o " + a.basis_[y].label +
                                 " leaves the invariant subspace");
        alg.mult[x][y][it->second] = local[j];
      }
    }

  const QuotientAlgebra& jac = a.sectors_[0].algebra;
  alg.unit = Vec(dim);
  alg.unit[index.at({0, *jac.index_of(Monomial(n, 0))})] = CycScalar(1);
  alg.trace = Vec(dim);
  auto socle = index.find({0, jac.socle_index()});
  if (socle == index.end()) throw std::logic_error("socle of Jac(f) is not invariant");
  alg.trace[socle->second] = jac.trace_at_socle(Rational(static_cast<long>(r * static_cast<long>(jac.mu()))));
  return a;
}

std::size_t OrbifoldAlgebra::sector_of_power(long power) const {
  long r = static_cast<long>(sectors_.size());
  return static_cast<std::size_t>(((power % r) + r) % r);
}

Vec OrbifoldAlgebra::element(long power, const Poly& p) const {
  std::size_t s = sector_of_power(power);
  const Sector& sec = sectors_[s];
  Vec local = sec.algebra.coordinates(restrict_to(p.renamed(f_.poly.vars()), sec.fixed).poly);
  Vec out(dim());
  for (std::size_t j = 0; j < local.size(); ++j) {
    if (local[j].is_zero()) continue;
    auto it = std::find_if(basis_.begin(), basis_.end(),
                           [&](const OrbifoldBasisElement& b) { return b.sector == s && b.local == j; });
    if (it == basis_.end())
      throw std::invalid_argument("[" + p.to_string() + "]v_" + sector_name(sec.power) + " is not G-invariant");
    out[static_cast<std::size_t>(it - basis_.begin())] = local[j];
  }
  return out;
}

const Poly& OrbifoldAlgebra::h_class(std::size_t a, std::size_t b) const {
  auto it = h_.find({a, b});
  if (it == h_.end()) throw std::out_of_range("H is only defined when the fixed loci cover all coordinates");
  return it->second;
}

Poly OrbifoldAlgebra::compute_h(std::size_t a, std::size_t b) const {
  const Sector& sa = sectors_[a];
  const Sector& sb = sectors_[b];
  const Sector& sc = sectors_[sector_of_power(sa.power + sb.power)];
  std::vector<int> inter;
  std::set_intersection(sa.fixed.begin(), sa.fixed.end(), sb.fixed.begin(), sb.fixed.end(),
                        std::back_inserter(inter));
  std::vector<int> outside;
  std::set_difference(sc.fixed.begin(), sc.fixed.end(), inter.begin(), inter.end(), std::back_inserter(outside));

  Poly f_int = restrict_to(f_.poly, inter).poly;
  Rational mu_int(static_cast<long>(milnor(f_int)));
  Poly lhs = lift(hessian(f_int), positions_in(inter, sc.fixed), sc.algebra.vars());
  lhs *= CycScalar(Rational(1) / mu_int);
  Poly rhs = sc.algebra.hessian() * CycScalar(Rational(1, static_cast<long>(sc.algebra.mu())));
  Vec target = sc.algebra.coordinates(rhs);

  // H = c * det(d^2 f / dx_i dx_j) over the coordinates outside Fix(g) and Fix(h)
  Poly partial = partial_hessian(f_.poly, outside);
  Poly candidate = sc.algebra.normal_form(restrict_to(partial, sc.fixed).poly);
  Vec image = sc.algebra.coordinates(lhs * candidate);
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (image[k].is_zero()) continue;
    CycScalar c = target[k] / image[k];
    bool consistent = true;
    for (std::size_t j = 0; j < image.size() && consistent; ++j) consistent = image[j] * c == target[j];
    if (consistent) return candidate * c;
    break;
  }

  auto sol = sc.algebra.solve(lhs, rhs, positions_in(outside, sc.fixed));
  if (!sol)
    throw std::runtime_error("no H for (" + sa.g.to_string() + "), (" + sb.g.to_string() + ")");
  if (!sol->unique)
    throw std::runtime_error("H for (" + sa.g.to_string() + "), (" + sb.g.to_string() + ") is not unique");
  return sol->h;
}

std::optional<std::pair<std::size_t, Poly>> OrbifoldAlgebra::sector_product(std::size_t a, const Poly& phi,
                                                                            std::size_t b,
                                                                            const Poly& psi) const {
  const Sector& sa = sectors_[a];
  const Sector& sb = sectors_[b];
  if (!fix_union_holds(sa.g, sb.g)) return std::nullopt;
  std::size_t c = sector_of_power(sa.power + sb.power);
  const Sector& sc = sectors_[c];
  const auto& vars = f_.poly.vars();
  Poly prod = lift(phi, sa.fixed, vars) * lift(psi, sb.fixed, vars) * lift(h_class(a, b), sc.fixed, vars);
  Poly local = sc.algebra.normal_form(restrict_to(prod, sc.fixed).poly) * product_prefactor(sa.g);
  return std::make_pair(c, local);
}

std::size_t OrbifoldAlgebra::identity_socle_index() const {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k].sector == 0 && basis_[k].local == sectors_[0].algebra.socle_index()) return k;
  throw std::logic_error("socle of Jac(f) is not in the basis");
}

}  // namespace oja
