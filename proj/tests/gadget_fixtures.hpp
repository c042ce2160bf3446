#pragma once

#include <map>
#include <tuple>
#include <random>
#include <vector>

#include "pgr/embedding.hpp"
#include "pgr/graph.hpp"

namespace pgr::test {

/// Graph drawn on the lattice, with the orientation its drawing induces.
struct DrawnGraph {
  Graph graph;
  Embedding drawing;
  OrientationMap orientation;
};

inline DrawnGraph from_points(const std::vector<Point>& pts,
                              const std::vector<std::pair<int, int>>& edges) {
  DrawnGraph d;
  d.graph = Graph(static_cast<int>(pts.size()));
  for (auto [u, v] : edges) d.graph.add_edge(u, v);
  d.drawing = Embedding{2, pts};
  d.orientation = OrientationMap(d.graph);
  for (EdgeId e = 0; e < d.graph.edge_count(); ++e) {
    const Edge& ed = d.graph.edge(e);
    d.orientation[e] = pts[ed.u].x != pts[ed.v].x ? Orient::Horizontal : Orient::Vertical;
  }
  return d;
}

/// Random lattice tree with n vertices and maximum degree max_deg.
inline DrawnGraph random_lattice_tree(std::mt19937& rng, int n, int max_deg) {
  const Point dirs[4] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  std::vector<Point> pts{{0, 0, 0}};
  std::vector<int> deg{0};
  std::vector<std::pair<int, int>> edges;
  std::map<Point, int> at{{{0, 0, 0}, 0}};
  while (static_cast<int>(pts.size()) < n) {
    const int v = static_cast<int>(rng() % pts.size());
    if (deg[v] >= max_deg) continue;
    const Point p = pts[v] + dirs[rng() % 4];
    if (at.count(p)) continue;
    at[p] = static_cast<int>(pts.size());
    edges.push_back({v, static_cast<int>(pts.size())});
    pts.push_back(p);
    deg.push_back(1);
    ++deg[v];
  }
  return from_points(pts, edges);
}

/// Lattice graph on the given points with every unit-distance pair joined.
inline DrawnGraph induced_lattice_graph(const std::vector<Point>& pts) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(pts.size()); ++j)
      if (manhattan(pts[i], pts[j]) == 1) edges.push_back({i, j});
  return from_points(pts, edges);
}

/// Graph with explicit edge labels; the drawing is left empty.
inline DrawnGraph from_labels(int n, const std::vector<std::tuple<int, int, Orient>>& edges) {
  DrawnGraph d;
  d.graph = Graph(n);
  for (const auto& [u, v, o] : edges) d.graph.add_edge(u, v);
  d.orientation = OrientationMap(d.graph);
  for (std::size_t e = 0; e < edges.size(); ++e) d.orientation[static_cast<EdgeId>(e)] = std::get<2>(edges[e]);
  return d;
}

/// Maximum-degree-3 tree whose labels admit no embedding: the upper
/// T-junction pushes both side branches down, where their leaves meet.
inline DrawnGraph blocked_binary_tree() {
  constexpr Orient H = Orient::Horizontal, V = Orient::Vertical;
  return from_labels(12, {{0, 1, H}, {0, 2, H}, {0, 3, V}, {3, 4, H}, {3, 5, H}, {1, 6, V},
                          {2, 7, V}, {6, 8, H}, {6, 9, H}, {7, 10, H}, {7, 11, H}});
}

/// Depth-2 tree with every internal vertex of degree 4, labeled like a
/// cross; neighboring arms claim the same diagonal point.
inline DrawnGraph blocked_cross_tree() {
  constexpr Orient H = Orient::Horizontal, V = Orient::Vertical;
  std::vector<std::tuple<int, int, Orient>> edges;
  int n = 1;
  for (Orient arm : {H, H, V, V}) {
    const int a = n++;
    edges.push_back({0, a, arm});
    const Orient other = arm == H ? V : H;
    edges.push_back({a, n++, arm});
    edges.push_back({a, n++, other});
    edges.push_back({a, n++, other});
  }
  return from_labels(n, edges);
}

}  // namespace pgr::test
