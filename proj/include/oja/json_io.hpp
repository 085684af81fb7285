#pragma once

#include "json.hpp"
#include "oja/algebra.hpp"
#include "oja/duality.hpp"
#include "oja/jacobian.hpp"
#include "oja/orbifold.hpp"
#include "oja/rows.hpp"
#include "oja/symmetry.hpp"

namespace oja {

using ojson = nlohmann::ordered_json;

/// Power-basis coordinates as "p/q" strings, plus the readable form.
ojson to_json(const CycScalar& c);
/// {"vars", "terms": [{"exp", "coeff"}]} with terms in grevlex order.
ojson to_json(const Poly& p);
ojson to_json(const GroupElement& g);
ojson to_json(const SymmetryGroup& g);
ojson to_json(const InvertiblePoly& f);
ojson to_json(const QuotientAlgebra& a, const Rational& trace_scale);
ojson to_json(const OrbifoldAlgebra& a);
ojson to_json(const Fingerprint& fp);
ojson to_json(const IsoReport& r);
ojson to_json(const RowCheck& c);
ojson to_json(const DualityGraph& g);

CycScalar scalar_from_json(const ojson& j);
Poly poly_from_json(const ojson& j);

}  // namespace oja
