#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgr {

using VertexId = int;
using EdgeId = int;

/// Raised for malformed input and violated preconditions throughout the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u;
  VertexId v;  // u < v
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on dense vertex ids 0..n-1.
///
/// Edges are kept in insertion order and addressed by EdgeId; adjacency lists
/// are sorted by neighbor id. Once built the graph is never mutated by any
/// library routine, so it can be shared freely across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int add_vertex();
  /// Adds edge {u, v}. Throws on loops, duplicates and unknown endpoints.
  EdgeId add_edge(VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return adj_.empty(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Neighbors of v sorted ascending.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
  /// Edge ids parallel to neighbors(v).
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return adj_edge_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(adj_.at(v).size()); }
  int max_degree() const;
  int min_degree() const;

  bool has_edge(VertexId u, VertexId v) const { return edge_id(u, v).has_value(); }
  std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;

  void set_label(VertexId v, std::string label);
  const std::map<VertexId, std::string>& labels() const { return labels_; }

  /// Same vertex count and identical edge set (order-insensitive).
  bool same_edges(const Graph& other) const;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<EdgeId>> adj_edge_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::string> labels_;
};

/// Set of vertex degrees, stored as a bitmask over 0..31.
class DegreeSet {
 public:
  DegreeSet() = default;
  DegreeSet(std::initializer_list<int> members);

  static DegreeSet from_mask(std::uint32_t mask);

  void insert(int d);
  bool contains(int d) const { return d >= 0 && d < 32 && ((mask_ >> d) & 1u); }
  bool empty() const { return mask_ == 0; }
  bool subset_of(const DegreeSet& other) const { return (mask_ & ~other.mask_) == 0; }
  int min() const;
  int max() const;
  std::uint32_t mask() const { return mask_; }
  std::vector<int> members() const;

  DegreeSet operator|(const DegreeSet& o) const { return from_mask(mask_ | o.mask_); }
  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

  /// "{1,2,4}"; the empty set renders as "{}".
  std::string to_string() const;

 private:
  std::uint32_t mask_ = 0;
};

/// Grid with M rows and N columns. Vertex (i, j) has id i*N + j.
Graph make_grid(int rows, int cols);

/// Distinct degrees present in g. Throws on an empty graph.
DegreeSet degree_set(const Graph& g);

/// {d + k : d in D}. Throws if a member would become non-positive.
DegreeSet shift_degree_set(const DegreeSet& d, int k);

struct Component {
  Graph graph;
  std::vector<VertexId> original;  // local id -> id in the parent graph
};

/// Connected components ordered by smallest original vertex id.
std::vector<Component> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);

/// Subgraph induced by `keep`; result ids follow the order of `keep`.
Component induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, const std::vector<VertexId>& perm);

// Small named graphs used by tests, examples and the CLI.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);
Graph make_complete(int n);
Graph make_hypercube(int dim);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace pgr
