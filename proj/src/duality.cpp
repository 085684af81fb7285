#include "oja/duality.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oja {

namespace {

using SymVec = std::vector<Poly>;

SymVec sym_zero(const FiniteAlgebra& a, const std::vector<std::string>& vars) {
  return SymVec(a.dim(), Poly(vars));
}

SymVec sym_multiply(const FiniteAlgebra& a, const SymVec& x, const SymVec& y) {
  SymVec out = sym_zero(a, x.empty() ? std::vector<std::string>{} : x[0].vars());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (y[j].is_zero()) continue;
      Poly c = x[i] * y[j];
      const Vec& e = a.mult[i][j];
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!e[k].is_zero()) out[k] += c * e[k];
    }
  }
  return out;
}

SymVec sym_evaluate(const FiniteAlgebra& a, const Poly& p, const std::vector<SymVec>& images,
                    const std::vector<std::string>& vars) {
  std::vector<std::vector<SymVec>> powers(images.size());
  SymVec unit = sym_zero(a, vars);
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!a.unit[k].is_zero()) unit[k] = Poly::constant(vars, a.unit[k]);
  auto power = [&](std::size_t i, int e) -> const SymVec& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(unit);
    while (static_cast<int>(cache.size()) <= e) cache.push_back(sym_multiply(a, cache.back(), images[i]));
    return cache[static_cast<std::size_t>(e)];
  };
  SymVec out = sym_zero(a, vars);
  for (const auto& [m, c] : p.terms()) {
    SymVec term = unit;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = sym_multiply(a, term, power(i, m[i]));
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!term[k].is_zero()) out[k] += term[k] * c;
  }
  return out;
}

// phi(m) for monomials m, with cached powers of the images.
class MonomialImages {
 public:
  MonomialImages(const FiniteAlgebra& target, const std::vector<Vec>& images) : target_(target), images_(images) {
    powers_.resize(images.size());
  }

  Vec operator()(const Monomial& m) {
    Vec out = target_.unit;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) out = target_.multiply(out, power(i, m[i]));
    return out;
  }

 private:
  const FiniteAlgebra& target_;
  const std::vector<Vec>& images_;
  std::vector<std::vector<Vec>> powers_;

  const Vec& power(std::size_t i, int e) {
    auto& cache = powers_[i];
    if (cache.empty()) cache.push_back(target_.unit);
    while (static_cast<int>(cache.size()) <= e) cache.push_back(target_.multiply(cache.back(), images_[i]));
    return cache[static_cast<std::size_t>(e)];
  }
};

void monomials_up_to(const std::vector<long>& w, long bound, std::size_t i, Monomial& cur, long used,
                     const std::function<void(const Monomial&)>& visit) {
  if (i == w.size()) {
    visit(cur);
    return;
  }
  for (int e = 0; used + e * w[i] <= bound; ++e) {
    cur[i] = e;
    monomials_up_to(w, bound, i + 1, cur, used + e * w[i], visit);
  }
  cur[i] = 0;
}

std::string scalar_string(const CycScalar& c) { return c.is_rational() ? c.to_string() : "(" + c.to_string() + ")"; }

CycScalar bilinear(const Vec& a, const Matrix& g, const Vec& b) {
  CycScalar s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    CycScalar row;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero() && !g[i][j].is_zero()) row += g[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

Matrix transpose_of(const Matrix& m, std::size_t cols) {
  Matrix t(cols, Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace

SourcePresentation SourcePresentation::build(const InvertiblePoly& f) {
  SourcePresentation s;
  s.f = f;
  s.jac = QuotientAlgebra::build(f.poly, f.weights);
  s.algebra = to_finite_algebra(s.jac, Rational(static_cast<long>(s.jac.mu())));
  for (std::size_t i = 0; i < f.arity(); ++i) s.y_vars.push_back("y" + std::to_string(i + 1));
  for (std::size_t k = 0; k < s.jac.mu(); ++k) {
    std::string m = monomial_string(s.jac.basis()[k], s.y_vars);
    s.algebra.labels[k] = m.empty() ? "[1]" : "[" + m + "]";
  }
  return s;
}

std::string SourcePresentation::y_string(const Poly& p) const { return p.renamed(y_vars).to_string(); }

std::string IsoReport::failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name + ": " + c.detail;
  return "";
}

Matrix induced_map(const SourcePresentation& source, const FiniteAlgebra& target, const IsoWitness& w) {
  MonomialImages phi(target, w.images);
  Matrix out;
  for (const auto& m : source.jac.basis()) out.push_back(phi(m));
  return out;
}

IsoReport verify_algebra_iso(const SourcePresentation& source, const FiniteAlgebra& target, const IsoWitness& w) {
  if (w.images.size() != source.f.arity())
    throw std::invalid_argument("witness has " + std::to_string(w.images.size()) + " images for " +
                                std::to_string(source.f.arity()) + " variables");
  for (const auto& v : w.images)
    if (v.size() != target.dim()) throw std::invalid_argument("witness image has the wrong dimension");
  IsoReport r;
  std::size_t mu = source.jac.mu();

  r.checks.push_back({"dimension", mu == target.dim(),
                      "source " + std::to_string(mu) + ", target " + std::to_string(target.dim())});

  Check rel{"relations", true, "all " + std::to_string(source.f.arity()) + " relations map to 0"};
  for (std::size_t i = 0; i < source.f.arity() && rel.pass; ++i) {
    Poly d = source.f.poly.derivative(i);
    Vec v = evaluate(target, d, w.images);
    if (!is_zero_vec(v)) {
      rel.pass = false;
      rel.detail = "relation " + source.y_string(d) + " maps to " + target.element_string(v) + " != 0";
    }
  }
  r.checks.push_back(rel);

  std::vector<Vec> products;
  MonomialImages phi(target, w.images);
  Monomial cur(source.f.arity(), 0);
  monomials_up_to(source.f.weights.w, source.f.weights.socle_weight(), 0, cur, 0,
                  [&](const Monomial& m) { products.push_back(phi(m)); });
  std::size_t span = rank_of(products);
  r.checks.push_back({"span", span == target.dim(),
                      "products of images up to the socle degree span " + std::to_string(span) + " of " +
                          std::to_string(target.dim()) + " dimensions"});

  Matrix map = induced_map(source, target, w);
  std::size_t rank = rank_of(map);
  r.checks.push_back(
      {"rank", rank == mu, "induced map has rank " + std::to_string(rank) + ", source dimension " + std::to_string(mu)});

  r.algebra_iso = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  return r;
}

IsoReport verify_frobenius_iso(const SourcePresentation& source, const FiniteAlgebra& target, const IsoWitness& w,
                               bool allow_rescaling) {
  IsoReport r = verify_algebra_iso(source, target, w);
  if (!r.algebra_iso) return r;
  std::size_t mu = source.jac.mu();
  Matrix map = induced_map(source, target, w);
  Matrix gs = source.algebra.gram();
  Matrix gt = target.gram();

  std::size_t unit = *source.jac.index_of(Monomial(source.f.arity(), 0));
  std::size_t socle = source.jac.socle_index();
  r.source_pairing = gs[unit][socle];
  r.target_pairing = bilinear(map[unit], gt, map[socle]);
  r.socle_weight = source.f.weights.socle_weight();
  CycScalar ratio(1);
  if (allow_rescaling && !r.target_pairing->is_zero() && *r.target_pairing != *r.source_pairing) {
    ratio = *r.target_pairing / *r.source_pairing;
    r.rescaling = ratio;
  }

  Check pair{"pairing", true, "eta(1, " + source.algebra.labels[socle] + ") = " + scalar_string(*r.source_pairing) +
                                  " on both sides"};
  if (r.rescaling)
    pair.detail = "eta_T(phi a, phi b) = r eta_S(a, b) with r = " + scalar_string(ratio) +
                  "; y_i -> t^w_i y_i with t^" + std::to_string(r.socle_weight) + " = 1/r restores the pairing";
  for (std::size_t a = 0; a < mu && pair.pass; ++a)
    for (std::size_t b = a; b < mu && pair.pass; ++b) {
      CycScalar t = bilinear(map[a], gt, map[b]);
      if (t != gs[a][b] * ratio) {
        pair.pass = false;
        pair.detail = "eta(" + source.algebra.labels[a] + ", " + source.algebra.labels[b] + ") is " +
                      scalar_string(gs[a][b]) + " in the source but " + scalar_string(t) + " in the target";
      }
    }
  r.checks.push_back(pair);

  // columns of m are phi(basis_k); the inverse sends target coordinates to source coordinates
  Check inv{"inverse", true, "inverse map preserves the pairing"};
  Matrix m = transpose_of(map, target.dim());
  Matrix minv = inverse_of(m);
  if (minv.empty()) {
    inv.pass = false;
    inv.detail = "induced map is not invertible";
  }
  for (std::size_t u = 0; u < target.dim() && inv.pass; ++u)
    for (std::size_t v = u; v < target.dim() && inv.pass; ++v) {
      Vec a(mu), b(mu);
      for (std::size_t k = 0; k < mu; ++k) {
        a[k] = minv[k][u];
        b[k] = minv[k][v];
      }
      CycScalar s = bilinear(a, gs, b) * ratio;
      if (s != gt[u][v]) {
        inv.pass = false;
        inv.detail = "eta(" + target.labels[u] + ", " + target.labels[v] + ") is " + scalar_string(gt[u][v]) +
                     " in the target but " + scalar_string(s) + " after pulling back";
      }
    }
  r.checks.push_back(inv);
  r.frobenius = pair.pass && inv.pass;
  return r;
}

std::string witness_string(const SourcePresentation& source, const FiniteAlgebra& target, const IsoWitness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.images.size(); ++i) {
    if (i) out += ", ";
    out += source.y_vars[i] + " -> " + target.element_string(w.images[i]);
  }
  return out;
}

namespace {

struct Ansatz {
  std::vector<std::string> vars;
  std::vector<SymVec> images;
};

std::optional<IsoWitness> solve_ansatz(const SourcePresentation& source, const FiniteAlgebra& target,
                                       const Ansatz& ansatz, bool normalize, const SystemOptions& options,
                                       SearchResult& result) {
  const auto& vars = ansatz.vars;
  std::vector<Poly> eqs;
  for (std::size_t i = 0; i < source.f.arity(); ++i) {
    SymVec v = sym_evaluate(target, source.f.poly.derivative(i), ansatz.images, vars);
    for (auto& p : v)
      if (!p.is_zero()) eqs.push_back(std::move(p));
  }
  SymVec top = sym_evaluate(target, Poly::monomial(source.f.poly.vars(), source.jac.socle()), ansatz.images, vars);
  Poly norm(vars);
  for (std::size_t k = 0; k < target.dim(); ++k)
    if (!target.trace[k].is_zero()) norm += top[k] * target.trace[k];
  norm -= Poly::constant(vars, source.algebra.trace[source.jac.socle_index()]);
  if (normalize) eqs.push_back(norm);

  auto instantiate = [&](const std::vector<CycScalar>& values) {
    IsoWitness w;
    std::vector<Poly> consts;
    for (const auto& c : values) consts.push_back(Poly::constant({}, c));
    for (const auto& img : ansatz.images) {
      Vec v(target.dim());
      for (std::size_t k = 0; k < target.dim(); ++k)
        if (!img[k].is_zero()) v[k] = img[k].compose(consts).coeff(Monomial());
      w.images.push_back(std::move(v));
    }
    return w;
  };
  SystemStats stats;
  auto sol = solve_system(
      vars, eqs,
      [&](const std::vector<CycScalar>& values) {
        return verify_frobenius_iso(source, target, instantiate(values), !normalize).passed();
      },
      options, &stats);
  result.nodes += stats.nodes;
  result.capped = result.capped || stats.capped;
  if (!sol) return std::nullopt;
  return instantiate(*sol);
}

}  // namespace

SearchResult search_iso(const SourcePresentation& source, const FiniteAlgebra& target, const SearchOptions& options) {
  SearchResult result;
  std::size_t n = source.f.arity();
  if (source.jac.mu() != target.dim()) {
    result.reason = "dimensions differ: " + std::to_string(source.jac.mu()) + " vs " + std::to_string(target.dim());
    return result;
  }
  std::vector<bool> vanishes(n);
  std::vector<std::vector<std::size_t>> cands(n);
  for (std::size_t i = 0; i < n; ++i) {
    vanishes[i] = is_zero_vec(source.jac.coordinates(Poly::variable(source.f.poly.vars(), i)));
    for (std::size_t k = 0; k < target.dim(); ++k)
      if (target.degrees[k] == source.f.weights.q(i)) cands[i].push_back(k);
  }

  auto attempt = [&](bool normalize) {
    if (options.try_monomial) {
      std::vector<std::size_t> live;
      bool possible = true;
      for (std::size_t i = 0; i < n; ++i)
        if (!vanishes[i]) {
          live.push_back(i);
          possible = possible && !cands[i].empty();
        }
      std::vector<std::string> vars;
      for (std::size_t k = 0; k < live.size(); ++k) vars.push_back("c" + std::to_string(live[k] + 1));
      std::vector<std::size_t> pick(live.size(), 0);
      while (possible) {
        Ansatz a{vars, std::vector<SymVec>(n, sym_zero(target, vars))};
        for (std::size_t k = 0; k < live.size(); ++k)
          a.images[live[k]][cands[live[k]][pick[k]]] = Poly::variable(vars, k);
        ++result.candidates_tried;
        if (auto w = solve_ansatz(source, target, a, normalize, options.system, result)) {
          result.witness = std::move(w);
          result.ansatz = "monomial";
          result.rescaled = !normalize;
          return true;
        }
        std::size_t k = 0;
        while (k < live.size() && ++pick[k] == cands[live[k]].size()) pick[k++] = 0;
        if (k == live.size()) break;
      }
    }

    if (options.try_linear) {
      std::vector<std::string> vars;
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < n; ++i) {
        if (vanishes[i]) continue;
        for (std::size_t k : cands[i]) {
          vars.push_back("c" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
          slots.emplace_back(i, k);
        }
      }
      Ansatz a{vars, std::vector<SymVec>(n, sym_zero(target, vars))};
      for (std::size_t s = 0; s < slots.size(); ++s)
        a.images[slots[s].first][slots[s].second] = Poly::variable(vars, s);
      ++result.candidates_tried;
      if (auto w = solve_ansatz(source, target, a, normalize, options.system, result)) {
        result.witness = std::move(w);
        result.ansatz = "linear";
        result.rescaled = !normalize;
        return true;
      }
    }
    return false;
  };
  if (attempt(true)) return result;
  if (options.allow_rescaling && attempt(false)) return result;
  result.reason = result.capped ? "search exhausted its node budget" : "no solution within the graded ansatz";
  return result;
}

std::vector<std::size_t> DualityGraph::component_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : components) out.push_back(c.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string DualityGraph::to_dot() const {
  std::string out = "graph duality {\n";
  for (std::size_t k = 0; k < nodes.size(); ++k)
    out += "  n" + std::to_string(k) + " [label=\"" + nodes[k].label + "\"];\n";
  for (const auto& e : edges)
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [label=\"" + e.evidence + "\"];\n";
  return out + "}\n";
}

namespace {

std::vector<GroupElement> group_elements(const GraphNode& n) {
  if (!n.generator) return SymmetryGroup::trivial(n.f.arity()).elements();
  return SymmetryGroup::generate({*n.generator}, n.f.arity()).elements();
}

}  // namespace

std::optional<std::size_t> find_node(const std::vector<GraphNode>& nodes, const GraphNode& n) {
  auto mine = group_elements(n);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const GraphNode& o = nodes[k];
    if (o.f.arity() != n.f.arity() || o.f.poly.num_terms() != n.f.poly.num_terms()) continue;
    Poly target = o.f.poly.renamed(n.f.poly.vars());
    auto theirs = group_elements(o);
    if (theirs.size() != mine.size()) continue;
    for (const auto& perm : all_permutations(n.f.arity())) {
      if (n.f.poly.permuted(perm) != target) continue;
      std::vector<GroupElement> moved;
      for (const auto& g : mine) moved.push_back(g.permuted(perm));
      std::sort(moved.begin(), moved.end());
      auto sorted = theirs;
      std::sort(sorted.begin(), sorted.end());
      if (moved == sorted) return k;
    }
  }
  return std::nullopt;
}

DualityGraph duality_graph(const std::vector<std::pair<GraphNode, GraphNode>>& certified,
                           const std::vector<std::string>& evidence) {
  DualityGraph g;
  auto node_index = [&](const GraphNode& n) {
    if (auto k = find_node(g.nodes, n)) return *k;
    g.nodes.push_back(n);
    return g.nodes.size() - 1;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : certified) {
    std::size_t i = node_index(a);
    std::size_t j = node_index(b);
    pairs.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::vector<std::size_t> parent(g.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  std::map<std::pair<std::size_t, std::size_t>, std::string> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    if (i == j) continue;
    parent[root(i)] = root(j);
    edges.emplace(pairs[k], k < evidence.size() ? evidence[k] : "certified");
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) comps[root(k)].push_back(k);
  for (auto& [r, members] : comps) g.components.push_back(members);
  std::sort(g.components.begin(), g.components.end());
  for (const auto& c : g.components)
    for (std::size_t x = 0; x < c.size(); ++x)
      for (std::size_t y = x + 1; y < c.size(); ++y) edges.emplace(std::make_pair(c[x], c[y]), "composite");
  for (const auto& [e, why] : edges) g.edges.push_back({e.first, e.second, why});
  return g;
}

}  // namespace oja
