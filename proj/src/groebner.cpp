#include "oja/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oja {

namespace {

using OPoly = std::map<Monomial, CycScalar, MonomialOrder>;

OPoly to_ordered(const Poly& p, Order order) {
  OPoly out(MonomialOrder{order});
  for (const auto& [m, c] : p.terms()) out.emplace(m, c);
  return out;
}

Poly to_poly(const OPoly& p, const std::vector<std::string>& vars) {
  Poly out(vars);
  for (const auto& [m, c] : p) out.add_term(m, c);
  return out;
}

void add_scaled_shift(OPoly& p, const OPoly& g, const CycScalar& factor, const Monomial& shift) {
  for (const auto& [m, c] : g) {
    Monomial n = m + shift;
    CycScalar v = c * factor;
    auto [it, inserted] = p.try_emplace(std::move(n), v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) p.erase(it);
    }
  }
}

void make_monic(OPoly& p) {
  if (p.empty()) return;
  CycScalar inv = p.rbegin()->second.inverse();
  if (inv.is_one()) return;
  for (auto& [m, c] : p) c *= inv;
}

// Full reduction of p by monic basis elements.
OPoly reduce_ordered(OPoly p, const std::vector<OPoly>& basis, Order order) {
  OPoly rem(MonomialOrder{order});
  while (!p.empty()) {
    auto it = std::prev(p.end());
    const Monomial& lm = it->first;
    const OPoly* divisor = nullptr;
    for (const auto& g : basis) {
      if (divides(g.rbegin()->first, lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.emplace_hint(rem.begin(), lm, it->second);
      p.erase(it);
      continue;
    }
    Monomial shift = lm - divisor->rbegin()->first;
    CycScalar factor = -it->second;
    add_scaled_shift(p, *divisor, factor, shift);
  }
  return rem;
}

OPoly s_poly_ordered(const OPoly& f, const OPoly& g, Order order) {
  const Monomial& lf = f.rbegin()->first;
  const Monomial& lg = g.rbegin()->first;
  Monomial l = lcm(lf, lg);
  OPoly out(MonomialOrder{order});
  add_scaled_shift(out, f, f.rbegin()->second.inverse(), l - lf);
  add_scaled_shift(out, g, -g.rbegin()->second.inverse(), l - lg);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return leading.size() == 1 && total_degree(leading[0]) == 0;
}

Monomial leading_monomial(const Poly& p, Order order) {
  if (p.is_zero()) throw std::logic_error("leading monomial of zero polynomial");
  if (order == Order::Grevlex) return p.leading_monomial();
  MonomialOrder cmp{order};
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (best == nullptr || cmp(*best, m)) best = &m;
  return *best;
}

CycScalar leading_coeff(const Poly& p, Order order) { return p.coeff(leading_monomial(p, order)); }

Poly s_polynomial(const Poly& f, const Poly& g, Order order) {
  return to_poly(s_poly_ordered(to_ordered(f, order), to_ordered(g, order), order), f.vars());
}

GroebnerBasis groebner(const std::vector<Poly>& gens, Order order) {
  GroebnerBasis out;
  out.order = order;
  if (!gens.empty()) out.vars = gens[0].vars();
  MonomialOrder cmp{order};

  std::vector<OPoly> g;
  for (const auto& p : gens) {
    if (p.arity() != out.vars.size()) throw std::invalid_argument("groebner: generators over different rings");
    OPoly q = to_ordered(p, order);
    if (q.empty()) continue;
    make_monic(q);
    g.push_back(std::move(q));
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  std::set<Pair> done;
  auto lm = [&](std::size_t i) -> const Monomial& { return g[i].rbegin()->first; };
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto processed = [&](std::size_t a, std::size_t b) {
    Pair p = a < b ? Pair{a, b} : Pair{b, a};
    return done.count(p) > 0;
  };

  while (!pending.empty()) {
    // normal selection: smallest lcm of leading monomials
    auto best = pending.begin();
    Monomial best_lcm = lcm(lm(best->first), lm(best->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(lm(it->first), lm(it->second));
      if (cmp(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    done.insert({i, j});

    if (coprime(lm(i), lm(j))) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(lm(k), best_lcm) && processed(i, k) && processed(j, k)) chain = true;
    }
    if (chain) continue;

    OPoly r = reduce_ordered(s_poly_ordered(g[i], g[j], order), g, order);
    if (r.empty()) continue;
    make_monic(r);
    g.push_back(std::move(r));
    std::size_t n = g.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(lm(j), lm(i)) && (lm(j) != lm(i) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // interreduce tails
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto head = std::prev(minimal[i].end());
    OPoly lead(MonomialOrder{order});
    lead.emplace(head->first, head->second);
    OPoly tail = minimal[i];
    tail.erase(head->first);
    OPoly reduced = reduce_ordered(std::move(tail), others, order);
    for (auto& [m, c] : reduced) lead.emplace(m, c);
    minimal[i] = std::move(lead);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const OPoly& a, const OPoly& b) { return cmp(a.rbegin()->first, b.rbegin()->first); });
  for (const auto& p : minimal) {
    out.leading.push_back(p.rbegin()->first);
    out.generators.push_back(to_poly(p, out.vars));
  }
  return out;
}

Reducer::Reducer(const GroebnerBasis& gb) : order_(gb.order) {
  for (const auto& g : gb.generators) basis_.push_back(to_ordered(g, gb.order));
}

Poly Reducer::operator()(const Poly& p) const {
  if (basis_.empty()) return p;
  return to_poly(reduce_ordered(to_ordered(p, order_), basis_, order_), p.vars());
}

Poly reduce(const Poly& p, const GroebnerBasis& gb) { return Reducer(gb)(p); }

}  // namespace oja
