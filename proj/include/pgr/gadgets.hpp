#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgr/embedding.hpp"
#include "pgr/formula.hpp"
#include "pgr/graph.hpp"
#include "pgr/solver.hpp"

namespace pgr {

enum class GadgetKind { DoubleLadder, Square, ThreePlug, UTree, Windmill };

std::string to_string(GadgetKind k);
GadgetKind gadget_kind_from_string(const std::string& s);

struct Interconnector {
  VertexId id = -1;
  std::string label;  // x, y, z, w
  Orient axis = Orient::Horizontal;
  int order = 0;  // position in the circular order
};

/// Catalog entry. Footprints count lattice points per axis.
struct Gadget {
  GadgetKind kind = GadgetKind::Square;
  Graph graph;
  std::vector<Interconnector> interconnectors;
  Point footprint;
  std::optional<Point> pair_footprint;
  DegreeSet degree_set;
  /// Reference drawing; interconnectors x, y, z, w face +x, +y, -x, -y.
  Embedding drawing;
  /// Verified and substituted under the orientation read off the drawing.
  bool oriented = false;
  /// Inside lattice point for the pendant leaf of an unused interconnector.
  std::map<std::string, Point> reserved_slot;
  /// Leaf with a free lattice neighbor in the drawing (strictify).
  std::optional<VertexId> strict_leaf;
  std::optional<Point> strict_slot;

  const Interconnector& interconnector(const std::string& label) const;
  /// Axis labels of the drawing's edges.
  OrientationMap drawing_orientation() const;
};

Gadget gadget_from_json(const nlohmann::json& j);
nlohmann::json gadget_to_json(const Gadget& g);

/// Directory holding gadgets/*.json: $PGR_DATA_DIR if set, else the build
/// default.
std::string data_dir();

/// Catalog entry loaded once from data_dir()/gadgets/<kind>.json.
const Gadget& catalog(GadgetKind kind);

struct GadgetReport {
  bool conclusive = true;
  bool passed = true;
  std::vector<std::string> failures;
  std::uint64_t embeddings = 0;  // embeddings inspected, all variants
  std::optional<Point> pair_extent;
  /// Circular interconnector orders seen, up to reversal.
  std::vector<std::string> circular_orders;
};

nlohmann::json to_json(const GadgetReport& r);

/// Property checks: degree set in every usage variant, embedding count,
/// footprint, exposure of interconnectors, circular order (fixed, or all
/// realizable for the windmill), and the linked pair footprint when
/// declared. Variants attach a stub edge to each active interconnector; the
/// unconstrained kinds are searched freely, the oriented ones under the
/// drawing orientation.
GadgetReport verify_gadget(const Gadget& g, std::uint64_t node_budget = 20'000'000);

struct SubstitutionMap {
  GadgetKind kind = GadgetKind::Square;
  /// copy[v][k]: result vertex for gadget vertex k in the copy of v.
  std::vector<std::vector<VertexId>> copy;
  /// Square only: vertices of the edge square of each original edge.
  std::vector<std::vector<VertexId>> edge_copy;
  /// Per original edge: result edge for linked kinds, identified corner
  /// pair for the square.
  std::vector<std::pair<VertexId, VertexId>> edge_link;
  /// Per original edge: interconnector labels used at (u, v), u < v.
  std::vector<std::pair<std::string, std::string>> active;
  /// Per original vertex: copy turned by a quarter turn (three-plug).
  std::vector<char> rotated;
  /// Per result edge: {original vertex, gadget edge} when internal,
  /// {original vertex, -1 - i} for the slot leaf of interconnector i,
  /// {-1, original edge} when external, {-2, original edge} for the edges of
  /// a square's edge square.
  std::vector<std::pair<int, int>> edge_origin;
};

nlohmann::json to_json(const SubstitutionMap& m);

struct Substitution {
  Graph graph;
  SubstitutionMap map;
  /// Composed orientation; empty for the windmill and the square, whose
  /// copies may be reflected across a diagonal.
  OrientationMap orientation;
};

Substitution double_ladder_substitution(const Graph& g, const OrientationMap& f);
Substitution square_substitution(const Graph& g, const OrientationMap& f);
Substitution three_plug_substitution(const Graph& g, const OrientationMap& f);
Substitution utree_substitution(const Graph& g, const OrientationMap& f);
/// Interconnectors are dealt to incident edges in edge order, or in a
/// random order per vertex when a seed is given.
Substitution windmill_substitution(const Graph& g,
                                   std::optional<std::uint32_t> seed = std::nullopt);

/// Internal edges take the gadget drawing orientation (axes swapped in
/// rotated copies), external edges the label of their original edge.
OrientationMap compose_orientation(const OrientationMap& gadget_f, const OrientationMap& f_g,
                                   const SubstitutionMap& m);
OrientationMap compose_orientation_utree(const OrientationMap& f_u, const OrientationMap& f_s,
                                         const SubstitutionMap& m);

/// Places q(v) at h(i,j) = (2i+2j, -2i+2j) for v drawn at (i,j) and fills
/// the edge squares. The embedding must respect f.
Embedding square_transport(const Graph& g, const OrientationMap& f, const Embedding& e,
                           const Substitution& q);
Point square_h(int i, int j);
/// Inverse of square_h; throws unless the point is in its image.
std::pair<int, int> square_h_inverse(const Point& p);

/// Adds one leaf to the catalog leaf of the first three-plug copy.
Graph strictify(const Graph& t, const SubstitutionMap& m);

Graph prism(const Graph& g);
/// Prism plus a pendant leaf on both copies of every vertex whose degree is
/// in d2.
Graph hairy_prism(const Graph& g, const DegreeSet& d2);

enum class ReduceTarget { Tree124, Tree123, Tree13, StrictBinary, Graph23, Graph24 };

ReduceTarget reduce_target_from_string(const std::string& s);
std::string to_string(ReduceTarget t);

struct Reduction {
  Graph graph;
  OrientationMap orientation;  // composed along the pipeline
};

Reduction reduce(const NaeFormula& phi, ReduceTarget target);

}  // namespace pgr
