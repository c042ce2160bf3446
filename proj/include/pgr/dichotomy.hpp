#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "pgr/embedding.hpp"
#include "pgr/graph.hpp"
#include "pgr/solver.hpp"

namespace pgr {

enum class Complexity { Polynomial, NPComplete, OpenCase, NoSuchInput };

std::string to_string(Complexity c);

/// One cell of the complexity tables.
struct DichotomyClass {
  Complexity complexity = Complexity::OpenCase;
  /// Cell text as transcribed: "P", "NPC", "NPC1", "NPC2", "?" or "—".
  std::string tag;
  bool base = false;   // bold in the table
  bool prior = false;  // result carried over from earlier literature
  std::string applies_to;  // "graphs" or "trees"
  /// Compact provenance string, e.g. "2d:{1,4}:graphs:P*".
  std::string source;
};

/// Table lookup for D-graphs. 2D uses the 15-row table; 3D splits D into its
/// parts below and above 4 and reads the 8x8 table. Throws on an empty set,
/// degree 0, or a degree above 2*dim.
DichotomyClass classify(const DegreeSet& d, int dim);

/// D-trees column of the 2D table.
DichotomyClass classify_trees(const DegreeSet& d);

/// Tables regenerated from classify, tab separated, one row per line.
std::string render_table1();
std::string render_table2();

struct RecognitionResult {
  Verdict verdict = Verdict::No;
  std::optional<Embedding> witness;
  std::string method;
  std::optional<DichotomyClass> classification;
};

nlohmann::json to_json(const RecognitionResult& r);

struct GridShape {
  int rows = 0;  // rows <= cols
  int cols = 0;
  Embedding embedding;
};

/// Recognizes graphs isomorphic to make_grid(M, N). Walks the boundary from a
/// corner, then fills every inner vertex as the common neighbor completing a
/// unit square.
std::optional<GridShape> is_grid(const Graph& g);

struct GridShape3 {
  int dims[3] = {0, 0, 0};  // ascending
  Embedding embedding;
};

/// 3D analog of is_grid, including degenerate boxes with unit extents.
std::optional<GridShape3> is_grid_3d(const Graph& g);

/// Paths, even cycles and odd cycles.
RecognitionResult recognize_12(const Graph& g);
/// Always no; requires degrees within {3,4}.
RecognitionResult recognize_34(const Graph& g);
/// Yes iff the degree-4 vertices induce a grid.
RecognitionResult recognize_14(const Graph& g);
/// Yes iff the degree-6 vertices induce a 3D grid.
RecognitionResult recognize_16_3d(const Graph& g);
/// Always no; requires min degree at least 4.
RecognitionResult recognize_456_3d(const Graph& g);

/// Component-wise dispatch to a polynomial recognizer or to exact search.
RecognitionResult recognize(const Graph& g, int dim,
                            std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace pgr
