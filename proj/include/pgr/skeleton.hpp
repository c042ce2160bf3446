#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pgr/embedding.hpp"
#include "pgr/formula.hpp"
#include "pgr/graph.hpp"

namespace pgr {

/// Where each variable hangs off the main cord.
struct VariableSite {
  int variable = 0;  // 1-based
  VertexId anchor = -1;
  VertexId positive_connector = -1;
  VertexId negative_connector = -1;
  int positive_cord = -1;  // index into transversal_cords
  int negative_cord = -1;
};

struct FlagSite {
  EdgeId edge = -1;
  int clause = 0;  // 0-based
  Literal literal = 0;
};

struct SkeletonProvenance {
  NaeFormula formula;
  std::vector<VariableSite> variables;
  std::vector<FlagSite> flags;
  /// Literal carried by each transversal cord; 0 for the wall cords.
  std::vector<Literal> cord_literal;
};

/// {1,2,4}-tree encoding a NAE-3CNF formula.
///
/// Layout: a horizontal main cord with a variable every 4 columns, bounded by
/// wall cords 3 columns beyond the first and last variable and capped by a
/// vertex with three leaves at each end. Each variable has
/// two vertical cords on opposite sides of the main cord, one per literal,
/// with one row per clause. A literal's cord carries a flag (an arm of length
/// 2) at clause row j exactly when the literal does not occur in clause j;
/// every other arm is a single leaf. Flags pointing into the same gap
/// collide, so each side of the main cord needs, in every clause row, an
/// unflagged cord: a literal of that clause on each side.
struct ExtendedSkeleton {
  Graph graph;
  std::vector<EdgeId> flags;
  std::vector<VertexId> main_cord;  // left to right
  std::vector<std::vector<VertexId>> transversal_cords;  // outward from the main cord
  SkeletonProvenance provenance;
};

ExtendedSkeleton build_extended_skeleton(const NaeFormula& phi);

/// Which rule labeled an edge in consistent_orientation.
enum class OrientRule { MainCord, TransversalCord, Connector, FourHorizontal, FourVertical, Flag };

std::string to_string(OrientRule r);

/// Consistent orientation computed from the graph alone: flags, skeleton,
/// degree-4 paths, main and transversal cords, then the labeling passes in
/// order. Throws when the main cord is not unique or an edge stays undefined.
/// `rules`, when given, receives the rule that set each edge.
OrientationMap consistent_orientation(const ExtendedSkeleton& s,
                                      std::vector<OrientRule>* rules = nullptr);

/// Empty iff the annotations match the graph.
std::vector<std::string> validate_skeleton_structure(const ExtendedSkeleton& s);

/// Variable i is true iff its positive cord leaves the main cord to the left
/// of the main cord's direction.
Assignment decode_assignment(const ExtendedSkeleton& s, const Embedding& e);

nlohmann::json skeleton_sidecar(const ExtendedSkeleton& s);

}  // namespace pgr
