#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pgr/embedding.hpp"
#include "pgr/graph.hpp"

namespace pgr::test {

/// Random spanning tree plus extra edges with probability p.
inline Graph random_connected(std::mt19937& rng, int n, double p) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v);
  std::bernoulli_distribution extra(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && extra(rng)) g.add_edge(u, v);
  return g;
}

/// Random tree with maximum degree at most max_deg.
inline Graph random_tree(std::mt19937& rng, int n, int max_deg) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u)
      if (g.degree(u) < max_deg) open.push_back(u);
    g.add_edge(open[rng() % open.size()], v);
  }
  return g;
}

/// Visits every embedding with vertex 0 at the origin, placing vertices in
/// id order next to any already placed neighbor. Requires every vertex v > 0
/// to have a neighbor of smaller id.
template <class Visit>
void brute_force_each(const Graph& g, int dim, Visit&& visit) {
  const int n = g.vertex_count();
  Embedding e{dim, std::vector<Point>(n)};
  std::vector<Point> dirs;
  for (int a = 0; a < dim; ++a)
    for (int s : {1, -1}) {
      Point d;
      d[a] = s;
      dirs.push_back(d);
    }
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      visit(e);
      return;
    }
    VertexId anchor = -1;
    for (VertexId u : g.neighbors(v))
      if (u < v) {
        anchor = u;
        break;
      }
    for (const Point& d : dirs) {
      const Point p = e.points[anchor] + d;
      bool ok = true;
      for (VertexId u = 0; u < v && ok; ++u) {
        if (e.points[u] == p) ok = false;
        else if (g.has_edge(u, v) && manhattan(e.points[u], p) != 1) ok = false;
      }
      if (!ok) continue;
      e.points[v] = p;
      self(self, v + 1);
    }
  };
  if (n > 0) rec(rec, 1);
}

/// Canonical drawings of all embeddings found by brute_force_each.
inline std::vector<CanonicalDrawing> brute_force_drawings(const Graph& g, int dim) {
  std::set<CanonicalDrawing> out;
  brute_force_each(g, dim, [&](const Embedding& e) { out.insert(canonicalize(g, e)); });
  return {out.begin(), out.end()};
}

/// Canonical code of a graph with at most 11 vertices: the least upper
/// triangle bitmask over vertex orders sorted by (degree, refined degree).
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<std::vector<int>, int>> key(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    nd.insert(nd.begin(), g.degree(v));
    key[v] = {nd, v};
  }
  std::sort(key.begin(), key.end());
  std::vector<int> order(n), cls(n);
  for (int i = 0; i < n; ++i) {
    order[i] = key[i].second;
    cls[i] = i > 0 && key[i].first == key[i - 1].first ? cls[i - 1] : i;
  }
  std::uint64_t best = ~0ULL;
  std::vector<int> perm = order;
  // Enumerate products of permutations within classes.
  std::vector<int> starts;
  for (int i = 0; i < n; ++i)
    if (cls[i] == i) starts.push_back(i);
  starts.push_back(n);
  auto code = [&](const std::vector<int>& p) {
    std::uint64_t c = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.has_edge(p[i], p[j])) c |= 1ULL << bit;
    return c;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k + 1 == starts.size()) {
      best = std::min(best, code(perm));
      return;
    }
    auto b = perm.begin() + starts[k], e = perm.begin() + starts[k + 1];
    std::sort(b, e);
    do self(self, k + 1);
    while (std::next_permutation(b, e));
  };
  rec(rec, 0);
  return best;
}

/// All connected graphs on 1..max_n vertices up to isomorphism with maximum
/// degree at most max_deg. Every connected graph arises from a smaller one by
/// adding a vertex whose removal keeps it connected.
inline std::vector<Graph> connected_graphs(int max_n, int max_deg) {
  std::vector<Graph> all{Graph(1)};
  std::vector<Graph> layer{Graph(1)};
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::uint64_t, Graph> next;
    for (const Graph& h : layer)
      for (std::uint32_t s = 1; s < (1u << (n - 1)); ++s) {
        Graph g(n);
        for (const auto& e : h.edges()) g.add_edge(e.u, e.v);
        bool ok = true;
        for (int v = 0; v < n - 1 && ok; ++v)
          if ((s >> v) & 1) {
            g.add_edge(v, n - 1);
            ok = g.degree(v) <= max_deg && g.degree(n - 1) <= max_deg;
          }
        if (!ok) continue;
        next.emplace(canonical_code(g), std::move(g));
      }
    layer.clear();
    for (auto& [code, g] : next) layer.push_back(std::move(g));
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

/// Fills every core vertex up to `target` degree with new pendant leaves.
inline Graph fill_with_leaves(const Graph& core, int target) {
  Graph g(core.vertex_count());
  for (const auto& e : core.edges()) g.add_edge(e.u, e.v);
  for (int v = 0; v < core.vertex_count(); ++v)
    while (g.degree(v) < target) g.add_edge(v, g.add_vertex());
  return g;
}

/// Random {1,4}-graph: a random lattice animal of at most `cells` points
/// (optionally with one core edge removed when that keeps it connected)
/// filled with leaves.
inline Graph random_14(std::mt19937& rng, int cells, bool perturb) {
  std::vector<Point> pts{{0, 0, 0}};
  const Point dirs[4] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  while (static_cast<int>(pts.size()) < cells) {
    const Point p = pts[rng() % pts.size()] + dirs[rng() % 4];
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  Graph core(static_cast<int>(pts.size()));
  for (int i = 0; i < core.vertex_count(); ++i)
    for (int j = i + 1; j < core.vertex_count(); ++j)
      if (manhattan(pts[i], pts[j]) == 1) core.add_edge(i, j);
  if (perturb && core.edge_count() > 0) {
    Graph cut(core.vertex_count());
    const int skip = static_cast<int>(rng() % core.edge_count());
    for (int e = 0; e < core.edge_count(); ++e)
      if (e != skip) cut.add_edge(core.edge(e).u, core.edge(e).v);
    if (is_connected(cut)) core = std::move(cut);
  }
  return fill_with_leaves(core, 4);
}

/// Full rows x cols grid core filled with leaves.
inline Graph grid_14(int rows, int cols) { return fill_with_leaves(make_grid(rows, cols), 4); }

}  // namespace pgr::test
