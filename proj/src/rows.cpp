#include "oja/rows.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace oja {

RowCheck verify_row(const CatalogRow& row, bool force_search) {
  RowCheck out;
  out.id = row.id;
  InvertiblePoly f1 = catalog_poly(row.f1);
  InvertiblePoly f2t = catalog_poly(row.f2_transpose);
  OrbifoldAlgebra target = OrbifoldAlgebra::build(f2t, row_generator(row));
  SourcePresentation source = SourcePresentation::build(f1);
  out.dim = target.dim();
  out.source_fingerprint = fingerprint(source.algebra);
  out.target_fingerprint = fingerprint(target.algebra());

  if (row.witness && !force_search) {
    IsoWitness w = witness_from_row(row, target);
    IsoReport r = verify_frobenius_iso(source, target.algebra(), w);
    out.witness_report = r;
    if (r.passed()) {
      out.passed = true;
      out.method = "witness";
      out.report = r;
      out.witness_text = witness_string(source, target.algebra(), w);
      return out;
    }
    out.note = "stored witness fails (" + r.failure() + ")";
  }

  SearchResult s = search_iso(source, target.algebra());
  if (!s.witness) {
    out.method = "search";
    if (!out.note.empty()) out.note += "; ";
    out.note += s.reason;
    return out;
  }
  out.report = verify_frobenius_iso(source, target.algebra(), *s.witness, s.rescaled);
  out.passed = out.report.passed();
  out.method = s.rescaled ? "search+rescaling" : "search";
  out.witness_text = witness_string(source, target.algebra(), *s.witness);
  if (s.rescaled) {
    if (!out.note.empty()) out.note += "; ";
    out.note += "pairing matched after y_i -> t^w_i y_i, t^" + std::to_string(out.report.socle_weight) + " = 1/(" +
                out.report.rescaling->to_string() + ")";
  }
  return out;
}

std::size_t thread_count_from_env() {
  if (const char* env = std::getenv("OJA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<RowCheck> verify_rows(const std::vector<CatalogRow>& rows, bool force_search, std::size_t threads) {
  std::vector<RowCheck> out(rows.size());
  std::vector<std::string> errors(rows.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      try {
        out[k] = verify_row(rows[k], force_search);
      } catch (const std::exception& e) {
        out[k].id = rows[k].id;
        out[k].note = e.what();
      }
    }
  };
  std::size_t n = std::min(std::max<std::size_t>(threads, 1), rows.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

DualityGraph catalog_graph(const Catalog& catalog, const std::vector<RowCheck>& checks) {
  std::vector<std::pair<GraphNode, GraphNode>> pairs;
  std::vector<std::string> evidence;
  for (const auto& c : checks) {
    if (!c.passed) continue;
    const CatalogRow& row = catalog.row(c.id);
    InvertiblePoly f1 = catalog_poly(row.f1);
    InvertiblePoly f2t = catalog_poly(row.f2_transpose);
    auto g = row_generator(row);
    GraphNode a{f1, std::nullopt, row.f1 + " {id}"};
    GraphNode b{f2t, g, row.f2_transpose + (g ? " <(" + g->to_string() + ")>" : " {id}")};
    pairs.emplace_back(std::move(a), std::move(b));
    evidence.push_back("row " + std::to_string(row.id));
  }
  return duality_graph(pairs, evidence);
}

}  // namespace oja
