#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pgr/graph.hpp"

namespace pgr {

/// Lattice point; the z coordinate stays 0 for 2D embeddings.
struct Point {
  int x = 0, y = 0, z = 0;

  int operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  int& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }
  Point operator+(const Point& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y, z - o.z}; }
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline int manhattan(const Point& a, const Point& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
}

/// Map from every vertex of a graph to a lattice point.
struct Embedding {
  int dim = 2;
  std::vector<Point> points;  // indexed by vertex id

  /// Translated copy.
  Embedding shifted(const Point& by) const;
  /// Per-axis [min, max] over all points. Requires at least one point.
  std::pair<Point, Point> bounds() const;
};

/// Injective, and every edge joins two points at distance 1.
/// Throws if the embedding does not cover exactly the vertex set.
bool validate_embedding(const Graph& g, const Embedding& e);

/// Axis-preserving lattice symmetry: signed permutation of coordinates.
struct LatticeSymmetry {
  std::array<int, 3> axis{0, 1, 2};  // output axis k reads input axis axis[k]
  std::array<int, 3> sign{1, 1, 1};

  Point apply(const Point& p) const;
};

/// All 8 (2D) or 48 (3D) symmetries, identity first.
const std::vector<LatticeSymmetry>& lattice_symmetries(int dim);

/// Unlabeled drawing normalized under translation, rotation and reflection.
struct CanonicalDrawing {
  int dim = 2;
  std::vector<Point> points;                      // sorted
  std::vector<std::pair<Point, Point>> segments;  // sorted, first < second

  friend auto operator<=>(const CanonicalDrawing&, const CanonicalDrawing&) = default;

  /// Extent in lattice points along each axis (x, y, z).
  Point size() const;
};

/// Lexicographically least image over all lattice symmetries, translated to
/// the non-negative octant with minimum 0 on every axis.
CanonicalDrawing canonicalize(const Graph& g, const Embedding& e);

/// Reads a drawing back as an embedding of the graph it induces (points in
/// drawing order, segments as edges).
std::pair<Graph, Embedding> drawing_as_embedding(const CanonicalDrawing& d);

/// Edge label of a consistent orientation.
enum class Orient : std::int8_t { Undefined = -1, Horizontal = 0, Vertical = 1 };

/// Per-edge orientation aligned with Graph::edges().
struct OrientationMap {
  std::vector<Orient> labels;

  OrientationMap() = default;
  explicit OrientationMap(const Graph& g) : labels(g.edge_count(), Orient::Undefined) {}

  Orient operator[](EdgeId e) const { return labels.at(e); }
  Orient& operator[](EdgeId e) { return labels.at(e); }
  bool complete() const;
};

/// True iff every labeled edge lies along axis 0 (Horizontal) or axis 1
/// (Vertical) in `e`.
bool respects_orientation(const Graph& g, const Embedding& e, const OrientationMap& f);

}  // namespace pgr
