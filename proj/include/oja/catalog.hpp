#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oja/duality.hpp"
#include "oja/orbifold.hpp"

namespace oja {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WitnessTerm {
  /// Power of the group generator naming the sector.
  long sector = 0;
  /// Monomial in x1..xN, empty for 1.
  std::string monomial;
  std::string scalar = "1";
};

struct CatalogType {
  std::string name;
  std::vector<std::string> variants;
  std::string strange_dual;
};

struct CatalogRow {
  int id = 0;
  std::string f1_type;
  std::string f1;
  std::string f2_type;
  /// 1-based index into the variants of f2_type.
  int f2_variant = 1;
  std::string f2_transpose;
  /// Generator phases "a1/r,...", empty for the trivial group.
  std::vector<std::string> group;
  bool reduced = false;
  /// One term list per source variable.
  std::optional<std::vector<std::vector<WitnessTerm>>> witness;
};

struct Catalog {
  int version = 1;
  std::vector<CatalogType> types;
  std::vector<CatalogRow> rows;

  const CatalogType& type(const std::string& name) const;
  const CatalogRow& row(int id) const;
};

const char* embedded_catalog_text();

/// Parses and validates: schema, invertibility of every polynomial, the
/// strange-duality involution, each row group inside G^SL of its transpose,
/// and the transpose relation between every type and its dual.
Catalog parse_catalog(std::string_view text);
/// Embedded catalog, or the file at path.
Catalog load_catalog(const std::optional<std::string>& path = std::nullopt);
/// Two-space indented JSON with a trailing newline.
std::string serialize_catalog(const Catalog& c);

InvertiblePoly catalog_poly(const std::string& text);
std::optional<GroupElement> row_generator(const CatalogRow& row);

/// Images of y1..yN described by the stored witness.
IsoWitness witness_from_row(const CatalogRow& row, const OrbifoldAlgebra& target);

}  // namespace oja
