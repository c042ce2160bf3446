#include "pgr/embedding.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace pgr {

Embedding Embedding::shifted(const Point& by) const {
  Embedding out = *this;
  for (auto& p : out.points) p = p + by;
  return out;
}

std::pair<Point, Point> Embedding::bounds() const {
  if (points.empty()) throw Error("bounds of empty embedding");
  Point lo = points.front(), hi = points.front();
  for (const auto& p : points)
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  return {lo, hi};
}

bool validate_embedding(const Graph& g, const Embedding& e) {
  if (static_cast<int>(e.points.size()) != g.vertex_count())
    throw Error("embedding places " + std::to_string(e.points.size()) + " vertices, graph has " +
                std::to_string(g.vertex_count()));
  if (e.dim != 2 && e.dim != 3) return false;
  std::set<Point> seen;
  for (const auto& p : e.points) {
    if (e.dim == 2 && p.z != 0) return false;
    if (!seen.insert(p).second) return false;
  }
  for (const auto& edge : g.edges())
    if (manhattan(e.points[edge.u], e.points[edge.v]) != 1) return false;
  return true;
}

Point LatticeSymmetry::apply(const Point& p) const {
  return {sign[0] * p[axis[0]], sign[1] * p[axis[1]], sign[2] * p[axis[2]]};
}

namespace {

std::vector<LatticeSymmetry> build_symmetries(int dim) {
  std::vector<LatticeSymmetry> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    if (dim == 2 && perm[2] != 2) continue;
    for (int s = 0; s < (1 << dim); ++s) {
      LatticeSymmetry sym;
      sym.axis = perm;
      for (int a = 0; a < dim; ++a) sym.sign[a] = (s >> a) & 1 ? -1 : 1;
      out.push_back(sym);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

const std::vector<LatticeSymmetry>& lattice_symmetries(int dim) {
  static const std::vector<LatticeSymmetry> two = build_symmetries(2);
  static const std::vector<LatticeSymmetry> three = build_symmetries(3);
  if (dim == 2) return two;
  if (dim == 3) return three;
  throw Error("dimension must be 2 or 3");
}

Point CanonicalDrawing::size() const {
  Point hi{-1, -1, -1};
  for (const auto& p : points)
    for (int a = 0; a < 3; ++a) hi[a] = std::max(hi[a], p[a]);
  return {hi.x + 1, hi.y + 1, hi.z + 1};
}

CanonicalDrawing canonicalize(const Graph& g, const Embedding& e) {
  if (!validate_embedding(g, e)) throw Error("cannot canonicalize an invalid embedding");
  std::optional<CanonicalDrawing> best;
  for (const auto& sym : lattice_symmetries(e.dim)) {
    CanonicalDrawing d;
    d.dim = e.dim;
    d.points.reserve(e.points.size());
    for (const auto& p : e.points) d.points.push_back(sym.apply(p));
    Point lo = d.points.empty() ? Point{} : d.points.front();
    for (const auto& p : d.points)
      for (int a = 0; a < 3; ++a) lo[a] = std::min(lo[a], p[a]);
    for (auto& p : d.points) p = p - lo;
    for (const auto& edge : g.edges()) {
      Point a = d.points[edge.u], b = d.points[edge.v];
      if (b < a) std::swap(a, b);
      d.segments.emplace_back(a, b);
    }
    std::sort(d.points.begin(), d.points.end());
    std::sort(d.segments.begin(), d.segments.end());
    if (!best || d < *best) best = std::move(d);
  }
  if (!best) return CanonicalDrawing{e.dim, {}, {}};
  return *best;
}

std::pair<Graph, Embedding> drawing_as_embedding(const CanonicalDrawing& d) {
  Graph g(static_cast<int>(d.points.size()));
  Embedding e{d.dim, d.points};
  auto index = [&](const Point& p) {
    auto it = std::lower_bound(d.points.begin(), d.points.end(), p);
    return static_cast<VertexId>(it - d.points.begin());
  };
  for (const auto& [a, b] : d.segments) g.add_edge(index(a), index(b));
  return {std::move(g), std::move(e)};
}

bool OrientationMap::complete() const {
  return std::none_of(labels.begin(), labels.end(),
                      [](Orient o) { return o == Orient::Undefined; });
}

bool respects_orientation(const Graph& g, const Embedding& e, const OrientationMap& f) {
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Orient o = f[id];
    if (o == Orient::Undefined) continue;
    const Point d = e.points[g.edge(id).u] - e.points[g.edge(id).v];
    const int axis = o == Orient::Horizontal ? 0 : 1;
    if (std::abs(d[axis]) != 1) return false;
  }
  return true;
}

}  // namespace pgr
