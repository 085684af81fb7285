#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oja/algebra.hpp"
#include "oja/orbifold.hpp"
#include "oja/polysystem.hpp"
#include "oja/symmetry.hpp"

namespace oja {

/// Jac(f1) in variables y1..yN, with the trace normalized for the trivial group.
struct SourcePresentation {
  InvertiblePoly f;
  QuotientAlgebra jac;
  FiniteAlgebra algebra;
  std::vector<std::string> y_vars;

  static SourcePresentation build(const InvertiblePoly& f);
  /// f or a polynomial in its variables, printed in y1..yN.
  std::string y_string(const Poly& p) const;
};

/// Images of y1..yN in the target algebra.
struct IsoWitness {
  std::vector<Vec> images;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct IsoReport {
  std::vector<Check> checks;
  bool algebra_iso = false;
  bool frobenius = false;
  /// eta(1, socle) on both sides, the socle being the source socle and its image.
  std::optional<CycScalar> source_pairing;
  std::optional<CycScalar> target_pairing;
  /// Set when the pairings agree only up to r = eta_T(phi a, phi b) / eta_S(a, b).
  /// Composing with y_i -> t^{w_i} y_i, t^{socle_weight} = 1/r, then gives a
  /// Frobenius isomorphism over an extension of the scalar field.
  std::optional<CycScalar> rescaling;
  long socle_weight = 0;

  bool passed() const { return algebra_iso && frobenius; }
  /// First failing check, empty when everything passed.
  std::string failure() const;
};

/// Relations map to zero, images span the target, dimensions agree and the
/// induced map on the monomial basis has full rank.
IsoReport verify_algebra_iso(const SourcePresentation& source, const FiniteAlgebra& target, const IsoWitness& w);

/// verify_algebra_iso followed by eta_T(phi a, phi b) = eta_S(a, b) on all
/// source basis pairs, and the same identity for the inverse map. With
/// allow_rescaling a constant ratio between the two pairings is accepted and
/// reported.
IsoReport verify_frobenius_iso(const SourcePresentation& source, const FiniteAlgebra& target, const IsoWitness& w,
                               bool allow_rescaling = false);

/// Coordinates of phi(basis monomial k) for every source basis index k.
Matrix induced_map(const SourcePresentation& source, const FiniteAlgebra& target, const IsoWitness& w);

struct SearchOptions {
  bool try_monomial = true;
  bool try_linear = true;
  /// Retry without the pairing normalization when no witness exists over the field.
  bool allow_rescaling = true;
  SystemOptions system;
};

struct SearchResult {
  std::optional<IsoWitness> witness;
  /// "monomial" or "linear" for the ansatz that succeeded.
  std::string ansatz;
  bool rescaled = false;
  std::size_t candidates_tried = 0;
  std::size_t nodes = 0;
  bool capped = false;
  std::string reason;
};

/// Looks for a graded Frobenius isomorphism Jac(f1) -> target. Each y_i is
/// sent to c_i b with b a basis element of the same degree, and otherwise to a
/// general combination of the basis elements of that degree.
SearchResult search_iso(const SourcePresentation& source, const FiniteAlgebra& target,
                        const SearchOptions& options = {});

std::string witness_string(const SourcePresentation& source, const FiniteAlgebra& target, const IsoWitness& w);

struct GraphNode {
  InvertiblePoly f;
  std::optional<GroupElement> generator;
  std::string label;
};

struct GraphEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  /// Where the isomorphism comes from, e.g. "row 3" or "via 2".
  std::string evidence;
};

struct DualityGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<std::size_t>> components;

  std::vector<std::size_t> component_sizes() const;
  std::string to_dot() const;
};

/// Index of an equal node up to renaming variables (group permuted along), if any.
std::optional<std::size_t> find_node(const std::vector<GraphNode>& nodes, const GraphNode& n);

/// Builds the graph from certified pairs: nodes are deduplicated up to
/// variable permutation, components come from the certified pairs, and every
/// further pair inside a component is added as an edge through a composite of
/// certified isomorphisms.
DualityGraph duality_graph(const std::vector<std::pair<GraphNode, GraphNode>>& certified,
                           const std::vector<std::string>& evidence);

}  // namespace oja
