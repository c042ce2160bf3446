#include "pgr/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace pgr {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw Error("negative vertex count");
  adj_.resize(vertex_count);
  adj_edge_.resize(vertex_count);
}

int Graph::add_vertex() {
  adj_.emplace_back();
  adj_edge_.emplace_back();
  return vertex_count() - 1;
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw Error("loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (has_edge(u, v))
    throw Error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  const EdgeId id = edge_count();
  edges_.push_back({u, v});
  auto insert_sorted = [&](VertexId a, VertexId b) {
    auto& nb = adj_[a];
    auto pos = std::lower_bound(nb.begin(), nb.end(), b);
    const auto off = pos - nb.begin();
    nb.insert(pos, b);
    adj_edge_[a].insert(adj_edge_[a].begin() + off, id);
  };
  insert_sorted(u, v);
  insert_sorted(v, u);
  return id;
}

int Graph::max_degree() const {
  int m = 0;
  for (const auto& nb : adj_) m = std::max(m, static_cast<int>(nb.size()));
  return m;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int m = vertex_count();
  for (const auto& nb : adj_) m = std::min(m, static_cast<int>(nb.size()));
  return m;
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  const auto& nb = adj_[u];
  auto pos = std::lower_bound(nb.begin(), nb.end(), v);
  if (pos == nb.end() || *pos != v) return std::nullopt;
  return adj_edge_[u][pos - nb.begin()];
}

void Graph::set_label(VertexId v, std::string label) {
  if (v < 0 || v >= vertex_count()) throw Error("label for unknown vertex " + std::to_string(v));
  labels_[v] = std::move(label);
}

bool Graph::same_edges(const Graph& other) const {
  if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) return false;
  return adj_ == other.adj_;
}

DegreeSet::DegreeSet(std::initializer_list<int> members) {
  for (int d : members) insert(d);
}

DegreeSet DegreeSet::from_mask(std::uint32_t mask) {
  DegreeSet s;
  s.mask_ = mask;
  return s;
}

void DegreeSet::insert(int d) {
  if (d < 0 || d >= 32) throw Error("degree out of supported range: " + std::to_string(d));
  mask_ |= 1u << d;
}

int DegreeSet::min() const {
  if (empty()) throw Error("min of empty degree set");
  return std::countr_zero(mask_);
}

int DegreeSet::max() const {
  if (empty()) throw Error("max of empty degree set");
  return 31 - std::countl_zero(mask_);
}

std::vector<int> DegreeSet::members() const {
  std::vector<int> out;
  for (int d = 0; d < 32; ++d)
    if (contains(d)) out.push_back(d);
  return out;
}

std::string DegreeSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int d : members()) {
    if (!first) s += ',';
    s += std::to_string(d);
    first = false;
  }
  return s + "}";
}

Graph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error("grid dimensions must be positive");
  Graph g(rows * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) g.add_edge(i * cols + j, i * cols + j + 1);
      if (i + 1 < rows) g.add_edge(i * cols + j, (i + 1) * cols + j);
    }
  return g;
}

DegreeSet degree_set(const Graph& g) {
  if (g.empty()) throw Error("degree set of empty graph");
  DegreeSet s;
  for (VertexId v = 0; v < g.vertex_count(); ++v) s.insert(g.degree(v));
  return s;
}

DegreeSet shift_degree_set(const DegreeSet& d, int k) {
  DegreeSet out;
  for (int m : d.members()) {
    if (m + k <= 0) throw Error("shift produces non-positive degree " + std::to_string(m + k));
    out.insert(m + k);
  }
  return out;
}

Component induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
  Component c{Graph(static_cast<int>(keep.size())), keep};
  for (const auto& e : g.edges())
    if (local[e.u] >= 0 && local[e.v] >= 0) c.graph.add_edge(local[e.u], local[e.v]);
  for (const auto& [v, label] : g.labels())
    if (local[v] >= 0) c.graph.set_label(local[v], label);
  return c;
}

std::vector<Component> connected_components(const Graph& g) {
  std::vector<int> seen(g.vertex_count(), 0);
  std::vector<Component> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> members{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (VertexId w : g.neighbors(members[i]))
        if (!seen[w]) {
          seen[w] = 1;
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(induced_subgraph(g, members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (VertexId w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return !g.empty() && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

Graph relabel(const Graph& g, const std::vector<VertexId>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) throw Error("permutation size mismatch");
  Graph out(g.vertex_count());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  for (const auto& [v, label] : g.labels()) out.set_label(perm[v], label);
  return out;
}

Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  Graph g = make_path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph make_star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_hypercube(int dim) {
  Graph g(1 << dim);
  for (int v = 0; v < (1 << dim); ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
  for (const auto& e : b.edges()) g.add_edge(e.u + a.vertex_count(), e.v + a.vertex_count());
  return g;
}

}  // namespace pgr
