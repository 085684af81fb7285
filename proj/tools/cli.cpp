#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "oja/catalog.hpp"
#include "oja/json_io.hpp"
#include "oja/rows.hpp"

namespace oja::cli {

namespace {

struct Options {
  bool json = false;
  std::string catalog;

  std::string poly;
  std::string vars;
  bool sl = false;
  bool basis = false;
  bool hessian = false;
  bool trace = false;
  std::string group;
  bool structure = false;
  bool pairing = false;
  bool full = false;
  int row = 0;
  bool all = false;
  bool search = false;
  bool dot = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Poly read_poly(const std::string& text) {
  auto vars = infer_vars(text);
  if (vars.empty()) throw InputError("no variables in '" + text + "'");
  return parse_poly(text, vars);
}

InvertiblePoly read_invertible(const std::string& text) { return build_invertible(read_poly(text)); }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::string monomial_or_one(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s = monomial_string(m, vars);
  return s.empty() ? "1" : s;
}

void print_json(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

int cmd_transpose(const Options& o, std::ostream& out) {
  InvertiblePoly t = transpose(read_invertible(o.poly));
  Poly p = t.poly;
  if (!o.vars.empty()) {
    auto names = split_commas(o.vars);
    if (names.size() != p.arity())
      throw InputError("--vars needs " + std::to_string(p.arity()) + " names, got " + std::to_string(names.size()));
    p = p.renamed(names);
  }
  if (o.json) {
    ojson j = to_json(t);
    j["poly"] = p.to_string();
    j["vars"] = p.vars();
    print_json(out, j);
  } else {
    out << p.to_string() << "\n";
  }
  return kOk;
}

int cmd_symmetry(const Options& o, std::ostream& out) {
  InvertiblePoly f = read_invertible(o.poly);
  SymmetryGroup g = max_symmetry_group(f);
  if (o.sl) g = sl_subgroup(g);
  if (o.json) {
    ojson j = to_json(g);
    j["kind"] = o.sl ? "SL" : "max";
    print_json(out, j);
    return kOk;
  }
  out << (o.sl ? "G^SL" : "G_f") << " order " << g.order() << "\n";
  out << "generators:";
  if (g.generators().empty()) out << " none";
  for (const auto& e : g.generators()) out << " (" << e.to_string() << ")";
  out << "\n";
  return kOk;
}

int cmd_milnor(const Options& o, std::ostream& out) {
  Poly f = read_poly(o.poly);
  std::size_t mu = milnor(f);
  if (o.json)
    print_json(out, {{"poly", f.to_string()}, {"milnor", mu}});
  else
    out << mu << "\n";
  return kOk;
}

int cmd_jacobian(const Options& o, std::ostream& out) {
  Poly f = read_poly(o.poly);
  auto w = find_weights(f);
  if (!w) throw InputError("'" + o.poly + "' is not quasi-homogeneous");
  QuotientAlgebra a = QuotientAlgebra::build(f, *w);
  Rational scale(static_cast<long>(a.mu()));
  if (o.json) {
    print_json(out, to_json(a, scale));
    return kOk;
  }
  const auto& vars = a.vars();
  bool summary = !o.basis && !o.hessian && !o.trace;
  if (summary) {
    out << "weights (";
    for (std::size_t i = 0; i < w->w.size(); ++i) out << (i ? "," : "") << w->w[i];
    out << ") degree " << w->d << "\n";
    out << "mu " << a.mu() << "\n";
    out << "socle [" << monomial_or_one(a.socle(), vars) << "]\n";
  }
  if (o.basis || summary) {
    out << "basis:";
    for (const auto& m : a.basis()) out << " [" << monomial_or_one(m, vars) << "]";
    out << "\n";
  }
  if (o.hessian) {
    out << "hess " << a.hessian().to_string() << "\n";
    out << "[hess] = " << a.hessian_socle_coeff().to_string() << "*[" << monomial_or_one(a.socle(), vars) << "]\n";
  }
  if (o.trace) {
    out << "lambda([hess]) = " << scale.get_str() << "\n";
    out << "lambda([" << monomial_or_one(a.socle(), vars) << "]) = " << a.trace_at_socle(scale).to_string() << "\n";
  }
  return kOk;
}

int cmd_orbifold(const Options& o, std::ostream& out) {
  InvertiblePoly f = read_invertible(o.poly);
  std::optional<GroupElement> g;
  if (!o.group.empty()) g = GroupElement::parse(o.group);
  if (g && g->arity() != f.arity()) throw InputError("group element and polynomial have different arity");
  OrbifoldAlgebra a = OrbifoldAlgebra::build(f, g, !o.full);
  if (o.json) {
    print_json(out, to_json(a));
    return kOk;
  }
  const FiniteAlgebra& alg = a.algebra();
  bool summary = !o.structure && !o.pairing;
  if (summary) {
    out << (o.full ? "Jac'" : "Jac") << "(" << f.poly.to_string() << ", " << a.group().to_string() << ") dim "
        << a.dim() << "\n";
    for (const auto& s : a.sectors()) {
      out << sector_name(s.power) << " (" << s.g.to_string() << ") parity " << s.parity << " f^g = "
          << (s.f_g.is_zero() ? "0" : s.f_g.to_string()) << ":";
      for (auto k : s.kept) out << " [" << monomial_or_one(s.algebra.basis()[k], s.algebra.vars()) << "]";
      out << "\n";
    }
  }
  if (o.structure) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = i; j < alg.dim(); ++j) {
        const Vec& p = alg.mult[i][j];
        if (is_zero_vec(p)) continue;
        out << alg.labels[i] << " o " << alg.labels[j] << " = " << alg.element_string(p) << "\n";
      }
  }
  if (o.pairing) {
    Matrix gram = alg.gram();
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = i; j < alg.dim(); ++j)
        if (!gram[i][j].is_zero())
          out << "eta(" << alg.labels[i] << ", " << alg.labels[j] << ") = " << gram[i][j].to_string() << "\n";
  }
  return kOk;
}

std::string fingerprint_text(const Fingerprint& fp) { return fp.to_string(); }

void print_row_text(const RowCheck& c, std::ostream& out, bool detailed) {
  out << "row " << c.id << ": " << (c.passed ? "PASS" : "FAIL") << " " << c.method << " dim " << c.dim << "\n";
  if (!c.witness_text.empty()) out << "  map: " << c.witness_text << "\n";
  if (c.report.source_pairing && c.report.target_pairing)
    out << "  pairing: " << c.report.source_pairing->to_string() << " / " << c.report.target_pairing->to_string()
        << "\n";
  if (!c.note.empty()) out << "  note: " << c.note << "\n";
  if (!detailed) return;
  if (c.witness_report) {
    out << "  stored witness:\n";
    for (const auto& k : c.witness_report->checks)
      out << "    " << k.name << " " << (k.pass ? "ok" : "FAILED") << (k.detail.empty() ? "" : ": " + k.detail)
          << "\n";
  }
  out << "  checks:\n";
  for (const auto& k : c.report.checks)
    out << "    " << k.name << " " << (k.pass ? "ok" : "FAILED") << (k.detail.empty() ? "" : ": " + k.detail) << "\n";
  out << "  fingerprints: " << fingerprint_text(c.source_fingerprint) << " / "
      << fingerprint_text(c.target_fingerprint) << "\n";
}

Catalog read_catalog(const Options& o) {
  return load_catalog(o.catalog.empty() ? std::nullopt : std::optional<std::string>(o.catalog));
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.all == (o.row != 0)) throw InputError("verify needs exactly one of --row <id> and --all");
  Catalog cat = read_catalog(o);
  std::vector<CatalogRow> rows;
  if (o.all)
    rows = cat.rows;
  else
    rows.push_back(cat.row(o.row));
  auto checks = verify_rows(rows, o.search, thread_count_from_env());
  std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const RowCheck& c) { return c.passed; });
  if (o.json) {
    ojson j;
    ojson rs = ojson::array();
    for (const auto& c : checks) rs.push_back(to_json(c));
    j["rows"] = rs;
    j["passed"] = passed;
    j["total"] = checks.size();
    print_json(out, j);
  } else {
    for (const auto& c : checks) print_row_text(c, out, !o.all);
    if (o.all) out << passed << "/" << checks.size() << " rows certified\n";
  }
  return passed == checks.size() ? kOk : kVerificationFailed;
}

int cmd_graph(const Options& o, std::ostream& out) {
  Catalog cat = read_catalog(o);
  auto checks = verify_rows(cat.rows, false, thread_count_from_env());
  DualityGraph g = catalog_graph(cat, checks);
  bool all = std::all_of(checks.begin(), checks.end(), [](const RowCheck& c) { return c.passed; });
  if (o.json) {
    print_json(out, to_json(g));
  } else if (o.dot) {
    out << g.to_dot();
  } else {
    out << "nodes " << g.nodes.size() << " edges " << g.edges.size() << "\n";
    out << "component sizes:";
    for (auto s : g.component_sizes()) out << " " << s;
    out << "\n";
    for (const auto& comp : g.components) {
      out << "component:";
      for (auto n : comp) out << " [" << g.nodes[n].label << "]";
      out << "\n";
    }
  }
  return all ? kOk : kVerificationFailed;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  Catalog cat = read_catalog(o);
  if (o.json) {
    out << serialize_catalog(cat);
    return kOk;
  }
  for (const auto& t : cat.types) {
    out << t.name << " (dual " << t.strange_dual << "):";
    for (const auto& v : t.variants) out << " " << v;
    out << "\n";
  }
  for (const auto& r : cat.rows) {
    out << "row " << r.id << ": " << r.f1_type << " " << r.f1 << " ~ (" << r.f2_transpose << ", "
        << (r.group.empty() ? "{id}" : "<(" + r.group.front() + ")>") << ")" << (r.reduced ? " reduced" : "")
        << (r.witness ? " witness" : "") << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Orbifold Jacobian algebras of invertible polynomials and strange duality", "oja"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--catalog", o.catalog, "Catalog file instead of the embedded one");

  auto* transpose_cmd = app.add_subcommand("transpose", "Berglund-Huebsch transpose");
  transpose_cmd->add_option("poly", o.poly)->required();
  transpose_cmd->add_option("--vars", o.vars, "Output variable names a,b,c");

  auto* symmetry_cmd = app.add_subcommand("symmetry", "Maximal diagonal symmetry group");
  symmetry_cmd->add_option("poly", o.poly)->required();
  symmetry_cmd->add_flag("--sl", o.sl, "Restrict to SL");

  auto* milnor_cmd = app.add_subcommand("milnor", "Milnor number");
  milnor_cmd->add_option("poly", o.poly)->required();

  auto* jacobian_cmd = app.add_subcommand("jacobian", "Jacobian algebra");
  jacobian_cmd->add_option("poly", o.poly)->required();
  jacobian_cmd->add_flag("--basis", o.basis);
  jacobian_cmd->add_flag("--hessian", o.hessian);
  jacobian_cmd->add_flag("--trace", o.trace);

  auto* orbifold_cmd = app.add_subcommand("orbifold", "Orbifold Jacobian algebra");
  orbifold_cmd->add_option("poly", o.poly)->required();
  orbifold_cmd->add_option("--group", o.group, "Generator a1/r,...,aN/r");
  orbifold_cmd->add_flag("--structure", o.structure);
  orbifold_cmd->add_flag("--pairing", o.pairing);
  orbifold_cmd->add_flag("--full", o.full, "All sectors before taking invariants");

  auto* verify_cmd = app.add_subcommand("verify", "Certify catalog rows");
  verify_cmd->add_option("--row", o.row);
  verify_cmd->add_flag("--all", o.all);
  verify_cmd->add_flag("--search", o.search, "Ignore stored witnesses");

  auto* graph_cmd = app.add_subcommand("graph", "Isomorphism graph of the catalog");
  graph_cmd->add_flag("--dot", o.dot);

  auto* catalog_cmd = app.add_subcommand("catalog", "Show the catalog");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (transpose_cmd->parsed()) return cmd_transpose(o, out);
    if (symmetry_cmd->parsed()) return cmd_symmetry(o, out);
    if (milnor_cmd->parsed()) return cmd_milnor(o, out);
    if (jacobian_cmd->parsed()) return cmd_jacobian(o, out);
    if (orbifold_cmd->parsed()) return cmd_orbifold(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (graph_cmd->parsed()) return cmd_graph(o, out);
    if (catalog_cmd->parsed()) return cmd_catalog(o, out);
  } catch (const std::exception& e) {
    err << "oja: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace oja::cli
