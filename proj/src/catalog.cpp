#include "oja/catalog.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace oja::detail {
extern const char* const kEmbeddedCatalog;
}

namespace oja {

using ojson = nlohmann::ordered_json;

const CatalogType& Catalog::type(const std::string& name) const {
  for (const auto& t : types)
    if (t.name == name) return t;
  throw CatalogError("unknown singularity type '" + name + "'");
}

const CatalogRow& Catalog::row(int id) const {
  for (const auto& r : rows)
    if (r.id == id) return r;
  throw CatalogError("no row with id " + std::to_string(id));
}

const char* embedded_catalog_text() { return detail::kEmbeddedCatalog; }

InvertiblePoly catalog_poly(const std::string& text) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < text.size(); ++k)
    if (text[k] == 'x' && k + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[k + 1])))
      n = std::max<std::size_t>(n, static_cast<std::size_t>(text[k + 1] - '0'));
  return build_invertible(parse_poly(text, default_vars(n)));
}

std::optional<GroupElement> row_generator(const CatalogRow& row) {
  if (row.group.empty()) return std::nullopt;
  return GroupElement::parse(row.group.front());
}

namespace {

template <typename T>
T field(const ojson& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw CatalogError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw CatalogError(where + ": field '" + key + "' has the wrong type");
  }
}

InvertiblePoly checked_poly(const std::string& text, const std::string& where) {
  try {
    return catalog_poly(text);
  } catch (const std::exception& e) {
    throw CatalogError(where + ": " + text + ": " + e.what());
  }
}

bool same_up_to_permutation(const Poly& a, const Poly& b) { return match_up_to_permutation(a, b).has_value(); }

void validate(const Catalog& c) {
  std::map<std::string, std::vector<InvertiblePoly>> variants;
  for (const auto& t : c.types) {
    if (variants.count(t.name)) throw CatalogError("type " + t.name + " is listed twice");
    if (t.variants.empty()) throw CatalogError("type " + t.name + " has no variants");
    for (const auto& v : t.variants) variants[t.name].push_back(checked_poly(v, "type " + t.name));
  }
  for (const auto& t : c.types) {
    if (!variants.count(t.strange_dual))
      throw CatalogError("type " + t.name + ": unknown strange dual " + t.strange_dual);
    if (c.type(t.strange_dual).strange_dual != t.name)
      throw CatalogError("strange duality is not an involution at " + t.name);
    bool found = false;
    for (const auto& v : variants[t.name])
      for (const auto& u : variants[t.strange_dual]) found = found || same_up_to_permutation(v.poly, transpose(u).poly);
    if (!found)
      throw CatalogError("no variant of " + t.name + " is the transpose of a variant of " + t.strange_dual);
  }
  std::set<int> ids;
  for (const auto& r : c.rows) {
    std::string where = "row " + std::to_string(r.id);
    if (!ids.insert(r.id).second) throw CatalogError(where + " is listed twice");
    if (!variants.count(r.f1_type)) throw CatalogError(where + ": unknown type " + r.f1_type);
    if (!variants.count(r.f2_type)) throw CatalogError(where + ": unknown type " + r.f2_type);
    if (r.f2_variant < 1 || static_cast<std::size_t>(r.f2_variant) > variants[r.f2_type].size())
      throw CatalogError(where + ": " + r.f2_type + " has no variant " + std::to_string(r.f2_variant));
    InvertiblePoly f1 = checked_poly(r.f1, where);
    InvertiblePoly f2t = checked_poly(r.f2_transpose, where);
    if (f1.arity() != f2t.arity()) throw CatalogError(where + ": f1 and the transpose have different arity");
    if (r.group.size() > 1) throw CatalogError(where + ": only cyclic groups are supported");
    SymmetryGroup sl = sl_subgroup(max_symmetry_group(f2t));
    for (const auto& g : r.group) {
      GroupElement e;
      try {
        e = GroupElement::parse(g);
      } catch (const std::exception& ex) {
        throw CatalogError(where + ": " + ex.what());
      }
      if (e.arity() != f2t.arity() || !sl.contains(e))
        throw CatalogError(where + ": (" + g + ") is not in G^SL of " + r.f2_transpose);
    }
    if (r.witness && r.witness->size() != f1.arity())
      throw CatalogError(where + ": witness needs one image per variable");
  }
}

}  // namespace

Catalog parse_catalog(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (field<std::string>(doc, "format", "catalog") != "oja-catalog") throw CatalogError("not an oja catalog");
  Catalog c;
  c.version = field<int>(doc, "version", "catalog");
  if (c.version != 1) throw CatalogError("unsupported catalog version " + std::to_string(c.version));
  for (const auto& t : field<ojson>(doc, "types", "catalog")) {
    CatalogType ct;
    ct.name = field<std::string>(t, "name", "type");
    ct.variants = field<std::vector<std::string>>(t, "variants", "type " + ct.name);
    ct.strange_dual = field<std::string>(t, "strange_dual", "type " + ct.name);
    c.types.push_back(std::move(ct));
  }
  for (const auto& r : field<ojson>(doc, "rows", "catalog")) {
    CatalogRow row;
    row.id = field<int>(r, "id", "row");
    std::string where = "row " + std::to_string(row.id);
    row.f1_type = field<std::string>(r, "f1_type", where);
    row.f1 = field<std::string>(r, "f1", where);
    row.f2_type = field<std::string>(r, "f2_type", where);
    row.f2_variant = field<int>(r, "f2_variant", where);
    row.f2_transpose = field<std::string>(r, "f2_transpose", where);
    row.group = field<std::vector<std::string>>(r, "group", where);
    row.reduced = field<bool>(r, "reduced", where);
    const ojson& w = field<ojson>(r, "witness", where);
    if (!w.is_null()) {
      if (!w.is_array()) throw CatalogError(where + ": witness must be a list");
      std::vector<std::vector<WitnessTerm>> images;
      for (const auto& image : w) {
        if (!image.is_array()) throw CatalogError(where + ": witness image must be a list of terms");
        std::vector<WitnessTerm> terms;
        for (const auto& t : image)
          terms.push_back({field<long>(t, "sector", where), field<std::string>(t, "monomial", where),
                           field<std::string>(t, "scalar", where)});
        images.push_back(std::move(terms));
      }
      row.witness = std::move(images);
    }
    c.rows.push_back(std::move(row));
  }
  validate(c);
  return c;
}

Catalog load_catalog(const std::optional<std::string>& path) {
  if (!path) return parse_catalog(embedded_catalog_text());
  std::ifstream in(*path);
  if (!in) throw CatalogError("cannot read catalog " + *path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string serialize_catalog(const Catalog& c) {
  ojson doc;
  doc["format"] = "oja-catalog";
  doc["version"] = c.version;
  doc["types"] = ojson::array();
  for (const auto& t : c.types) {
    ojson j;
    j["name"] = t.name;
    j["variants"] = t.variants;
    j["strange_dual"] = t.strange_dual;
    doc["types"].push_back(j);
  }
  doc["rows"] = ojson::array();
  for (const auto& r : c.rows) {
    ojson j;
    j["id"] = r.id;
    j["f1_type"] = r.f1_type;
    j["f1"] = r.f1;
    j["f2_type"] = r.f2_type;
    j["f2_variant"] = r.f2_variant;
    j["f2_transpose"] = r.f2_transpose;
    j["group"] = r.group;
    j["reduced"] = r.reduced;
    if (r.witness) {
      ojson images = ojson::array();
      for (const auto& image : *r.witness) {
        ojson terms = ojson::array();
        for (const auto& t : image) {
          ojson term;
          term["sector"] = t.sector;
          term["monomial"] = t.monomial;
          term["scalar"] = t.scalar;
          terms.push_back(term);
        }
        images.push_back(terms);
      }
      j["witness"] = images;
    } else {
      j["witness"] = nullptr;
    }
    doc["rows"].push_back(j);
  }
  return doc.dump(2) + "\n";
}

IsoWitness witness_from_row(const CatalogRow& row, const OrbifoldAlgebra& target) {
  if (!row.witness) throw CatalogError("row " + std::to_string(row.id) + " has no stored witness");
  IsoWitness w;
  const auto& vars = target.f().poly.vars();
  for (const auto& image : *row.witness) {
    Vec v(target.dim());
    for (const auto& t : image) {
      Poly p = t.monomial.empty() ? Poly::constant(vars, CycScalar(1)) : parse_poly(t.monomial, vars);
      Vec e = target.element(t.sector, p);
      CycScalar c = parse_scalar(t.scalar);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * e[k];
    }
    w.images.push_back(std::move(v));
  }
  return w;
}

}  // namespace oja
