#include "oja/polysystem.hpp"

#include <algorithm>

#include "oja/groebner.hpp"
#include "oja/roots.hpp"

namespace oja {

namespace {

class Solver {
 public:
  Solver(std::vector<std::string> vars, const SolutionFilter& accept, const SystemOptions& options)
      : vars_(std::move(vars)), accept_(accept), options_(options) {}

  std::optional<std::vector<CycScalar>> run(std::vector<Poly> eqs) {
    std::vector<std::optional<Poly>> bound(vars_.size());
    if (solve(std::move(eqs), bound, false)) return result_;
    return std::nullopt;
  }

  SystemStats stats;

 private:
  std::vector<std::string> vars_;
  const SolutionFilter& accept_;
  const SystemOptions& options_;
  std::vector<CycScalar> result_;

  using Bindings = std::vector<std::optional<Poly>>;

  static std::vector<std::size_t> support(const Poly& p) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < p.arity(); ++v)
      for (const auto& [m, c] : p.terms())
        if (m[v] > 0) {
          out.push_back(v);
          break;
        }
    return out;
  }

  void substitute(std::vector<Poly>& eqs, Bindings& bound, std::size_t v, const Poly& expr) const {
    std::vector<Poly> images;
    for (std::size_t k = 0; k < vars_.size(); ++k) images.push_back(Poly::variable(vars_, k));
    images[v] = expr;
    for (auto& e : eqs) e = e.compose(images);
    for (auto& b : bound)
      if (b) *b = b->compose(images);
    bound[v] = expr;
  }

  bool branch(const std::vector<Poly>& eqs, const Bindings& bound, std::size_t v, const CycScalar& value) {
    auto e = eqs;
    auto b = bound;
    substitute(e, b, v, Poly::constant(vars_, value));
    return solve(std::move(e), b, false);
  }

  bool leaf(const Bindings& bound) {
    std::vector<CycScalar> values;
    for (const auto& b : bound) {
      if (!b || !b->is_constant()) return false;
      values.push_back(b->coeff(Monomial(vars_.size(), 0)));
    }
    if (!accept_(values)) return false;
    result_ = std::move(values);
    return true;
  }

  bool solve(std::vector<Poly> eqs, Bindings& bound, bool reduced) {
    if (++stats.nodes > options_.node_cap) {
      stats.capped = true;
      return false;
    }
    std::vector<Poly> live;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) return false;
      e *= e.leading_coeff().inverse();
      if (std::find(live.begin(), live.end(), e) == live.end()) live.push_back(std::move(e));
    }
    std::sort(live.begin(), live.end(), [](const Poly& a, const Poly& b) {
      if (a.num_terms() != b.num_terms()) return a.num_terms() < b.num_terms();
      return a.total_degree() < b.total_degree();
    });

    if (live.empty()) {
      for (std::size_t v = 0; v < vars_.size(); ++v)
        if (!bound[v]) {
          for (const auto& value : options_.free_values)
            if (branch(live, bound, v, value)) return true;
          return false;
        }
      return leaf(bound);
    }

    for (const auto& e : live) {
      auto sup = support(e);
      if (sup.size() != 1) continue;
      std::size_t v = sup[0];
      UPoly u(static_cast<std::size_t>(e.total_degree()) + 1);
      for (const auto& [m, c] : e.terms()) u[static_cast<std::size_t>(m[v])] = c;
      for (const auto& r : roots_in_field(u))
        if (branch(live, bound, v, r)) return true;
      return false;
    }

    for (const auto& e : live) {
      for (std::size_t v : support(e)) {
        Monomial unit(vars_.size(), 0);
        unit[v] = 1;
        bool linear = true;
        for (const auto& [m, c] : e.terms())
          if (m[v] > 0 && m != unit) linear = false;
        if (!linear) continue;
        CycScalar c = e.coeff(unit);
        Poly expr = (e - Poly::monomial(vars_, unit, c)) * (-c.inverse());
        auto rest = live;
        auto b = bound;
        substitute(rest, b, v, expr);
        return solve(std::move(rest), b, false);
      }
    }

    for (const auto& e : live) {
      if (e.num_terms() != 1) continue;
      for (std::size_t v : support(e))
        if (branch(live, bound, v, CycScalar())) return true;
      return false;
    }

    if (!reduced) {
      GroebnerBasis gb = groebner(live, Order::Lex);
      if (gb.is_unit_ideal()) return false;
      return solve(gb.generators, bound, true);
    }

    for (std::size_t v = vars_.size(); v-- > 0;) {
      bool occurs = false;
      for (const auto& e : live)
        for (std::size_t s : support(e)) occurs = occurs || s == v;
      if (!occurs) continue;
      for (const auto& value : options_.free_values)
        if (branch(live, bound, v, value)) return true;
      return false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<CycScalar>> solve_system(const std::vector<std::string>& vars,
                                                   const std::vector<Poly>& equations, const SolutionFilter& accept,
                                                   const SystemOptions& options, SystemStats* stats) {
  Solver solver(vars, accept, options);
  auto out = solver.run(equations);
  if (stats) *stats = solver.stats;
  return out;
}

}  // namespace oja
