#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oja/catalog.hpp"
#include "oja/duality.hpp"

namespace oja {

struct RowCheck {
  int id = 0;
  bool passed = false;
  /// "witness", "search" or "search+rescaling".
  std::string method;
  /// Report for the stored witness, when the row has one and it was checked.
  std::optional<IsoReport> witness_report;
  /// Report for the map that certifies the row (or the last one tried).
  IsoReport report;
  std::string witness_text;
  std::string note;
  Fingerprint source_fingerprint;
  Fingerprint target_fingerprint;
  std::size_t dim = 0;
};

/// Checks the stored witness first and falls back to search_iso. With
/// force_search the stored witness is ignored.
RowCheck verify_row(const CatalogRow& row, bool force_search = false);

/// Rows checked on a worker pool; results keep the input order.
std::vector<RowCheck> verify_rows(const std::vector<CatalogRow>& rows, bool force_search, std::size_t threads);

/// OJA_THREADS when set to a positive integer, else the hardware concurrency.
std::size_t thread_count_from_env();

/// Nodes (f1, {id}) and (f2~, G) of every row, with an edge for every certified row.
DualityGraph catalog_graph(const Catalog& catalog, const std::vector<RowCheck>& checks);

}  // namespace oja
