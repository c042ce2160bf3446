#include <algorithm>
#include <array>
#include <set>

#include "pgr/dichotomy.hpp"

namespace pgr {

namespace {

std::vector<VertexId> common_neighbors(const Graph& g, VertexId a, VertexId b) {
  std::vector<VertexId> out;
  std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                        g.neighbors(b).end(), std::back_inserter(out));
  return out;
}

/// Straight walk c -> a -> ...: the next vertex after v (coming from p) is
/// the unique neighbor w of v that shares no neighbor with p except v.
std::vector<VertexId> walk_line(const Graph& g, VertexId c, VertexId a) {
  std::vector<VertexId> line{c, a};
  std::set<VertexId> seen{c, a};
  while (true) {
    const VertexId p = line[line.size() - 2];
    const VertexId v = line.back();
    VertexId next = -1;
    int candidates = 0;
    for (VertexId w : g.neighbors(v)) {
      if (w == p) continue;
      if (common_neighbors(g, w, p) == std::vector<VertexId>{v}) {
        next = w;
        ++candidates;
      }
    }
    if (candidates != 1 || seen.count(next)) break;
    line.push_back(next);
    seen.insert(next);
  }
  return line;
}

/// Checks that `pos` is a bijection onto the box and the edge set is exactly
/// the box's unit segments.
bool matches_box(const Graph& g, const std::vector<Point>& pos, const Point& extent) {
  const long long cells = 1LL * extent.x * extent.y * extent.z;
  if (cells != g.vertex_count()) return false;
  long long expected = 0;
  for (int a = 0; a < 3; ++a) {
    Point e = extent;
    e[a] -= 1;
    expected += 1LL * e.x * e.y * e.z;
  }
  if (expected != g.edge_count()) return false;
  std::set<Point> used(pos.begin(), pos.end());
  if (static_cast<int>(used.size()) != g.vertex_count()) return false;
  for (const auto& e : g.edges())
    if (manhattan(pos[e.u], pos[e.v]) != 1) return false;
  return true;
}

RecognitionResult yes(Embedding e, std::string method) {
  return {Verdict::Yes, std::move(e), std::move(method), std::nullopt};
}

RecognitionResult no(std::string method) {
  return {Verdict::No, std::nullopt, std::move(method), std::nullopt};
}

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw Error(std::string(who) + " requires a connected graph");
}

void require_degrees(const Graph& g, const DegreeSet& allowed, const char* who) {
  if (g.vertex_count() > 1 && !degree_set(g).subset_of(allowed))
    throw Error(std::string(who) + " requires degrees in " + allowed.to_string() + ", got " +
                degree_set(g).to_string());
}

/// Vertex order along g when g is a path.
std::optional<std::vector<VertexId>> path_order(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return std::vector<VertexId>{0};
  if (g.edge_count() != n - 1 || g.max_degree() > 2) return std::nullopt;
  VertexId start = -1;
  for (VertexId v = 0; v < n && start < 0; ++v)
    if (g.degree(v) == 1) start = v;
  std::vector<VertexId> order{start};
  VertexId prev = -1;
  while (static_cast<int>(order.size()) < n) {
    const VertexId v = order.back();
    VertexId next = -1;
    for (VertexId w : g.neighbors(v))
      if (w != prev) next = w;
    if (next < 0) return std::nullopt;
    prev = v;
    order.push_back(next);
  }
  return order;
}

/// Places leaves of a core embedded on a box: each leaf goes to the first
/// free lattice neighbor of its anchor in the given direction order.
std::optional<Embedding> place_leaves(const Graph& g, const std::vector<VertexId>& core,
                                      const Embedding& core_embedding,
                                      const std::vector<Point>& priority, int dim) {
  Embedding e{dim, std::vector<Point>(g.vertex_count())};
  std::vector<char> placed(g.vertex_count(), 0);
  std::set<Point> used;
  for (std::size_t i = 0; i < core.size(); ++i) {
    e.points[core[i]] = core_embedding.points[i];
    placed[core[i]] = 1;
    used.insert(core_embedding.points[i]);
  }
  for (VertexId c : core)
    for (VertexId leaf : g.neighbors(c)) {
      if (placed[leaf]) continue;
      bool done = false;
      for (const Point& d : priority) {
        const Point p = e.points[c] + d;
        if (used.count(p)) continue;
        e.points[leaf] = p;
        placed[leaf] = 1;
        used.insert(p);
        done = true;
        break;
      }
      if (!done) return std::nullopt;
    }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!placed[v]) return std::nullopt;
  if (!validate_embedding(g, e)) return std::nullopt;
  return e;
}

}  // namespace

std::optional<GridShape> is_grid(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || !is_connected(g)) return std::nullopt;
  if (g.max_degree() <= 2) {
    if (auto order = path_order(g)) {
      GridShape s{1, n, Embedding{2, std::vector<Point>(n)}};
      for (int i = 0; i < n; ++i) s.embedding.points[(*order)[i]] = {i, 0, 0};
      return s;
    }
    if (n == 4 && g.edge_count() == 4) {
      GridShape s{2, 2, Embedding{2, std::vector<Point>(4)}};
      const VertexId a = g.neighbors(0)[0], b = g.neighbors(0)[1];
      const auto far = common_neighbors(g, a, b);
      if (far.size() != 2) return std::nullopt;
      s.embedding.points[0] = {0, 0, 0};
      s.embedding.points[a] = {1, 0, 0};
      s.embedding.points[b] = {0, 1, 0};
      s.embedding.points[far[0] == 0 ? far[1] : far[0]] = {1, 1, 0};
      return s;
    }
    return std::nullopt;
  }
  VertexId corner = -1;
  for (VertexId v = 0; v < n && corner < 0; ++v)
    if (g.degree(v) == 2) corner = v;
  if (corner < 0) return std::nullopt;
  const auto row = walk_line(g, corner, g.neighbors(corner)[0]);
  const auto col = walk_line(g, corner, g.neighbors(corner)[1]);
  const int cols = static_cast<int>(row.size());
  const int rows = static_cast<int>(col.size());
  if (1LL * rows * cols != n) return std::nullopt;
  std::vector<std::vector<VertexId>> at(rows, std::vector<VertexId>(cols, -1));
  for (int j = 0; j < cols; ++j) at[0][j] = row[j];
  for (int i = 0; i < rows; ++i) at[i][0] = col[i];
  for (int i = 1; i < rows; ++i)
    for (int j = 1; j < cols; ++j) {
      auto cn = common_neighbors(g, at[i - 1][j], at[i][j - 1]);
      cn.erase(std::remove(cn.begin(), cn.end(), at[i - 1][j - 1]), cn.end());
      if (cn.size() != 1) return std::nullopt;
      at[i][j] = cn[0];
    }
  std::vector<Point> pos(n);
  std::vector<char> hit(n, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (hit[at[i][j]]) return std::nullopt;
      hit[at[i][j]] = 1;
      pos[at[i][j]] = rows <= cols ? Point{j, i, 0} : Point{i, j, 0};
    }
  if (!matches_box(g, pos, {cols, rows, 1})) return std::nullopt;
  return GridShape{std::min(rows, cols), std::max(rows, cols), Embedding{2, std::move(pos)}};
}

std::optional<GridShape3> is_grid_3d(const Graph& g) {
  if (auto flat = is_grid(g)) {
    GridShape3 s{{1, flat->rows, flat->cols}, Embedding{3, flat->embedding.points}};
    return s;
  }
  const int n = g.vertex_count();
  if (n == 0 || !is_connected(g)) return std::nullopt;
  VertexId corner = -1;
  for (VertexId v = 0; v < n && corner < 0; ++v)
    if (g.degree(v) == 3) corner = v;
  if (corner < 0) return std::nullopt;
  std::array<std::vector<VertexId>, 3> axes;
  for (int a = 0; a < 3; ++a) axes[a] = walk_line(g, corner, g.neighbors(corner)[a]);
  const int X = static_cast<int>(axes[0].size());
  const int Y = static_cast<int>(axes[1].size());
  const int Z = static_cast<int>(axes[2].size());
  if (1LL * X * Y * Z != n) return std::nullopt;
  std::vector<VertexId> at(static_cast<std::size_t>(n), -1);
  auto idx = [&](int x, int y, int z) -> VertexId& { return at[(static_cast<std::size_t>(z) * Y + y) * X + x]; };
  for (int x = 0; x < X; ++x) idx(x, 0, 0) = axes[0][x];
  for (int y = 0; y < Y; ++y) idx(0, y, 0) = axes[1][y];
  for (int z = 0; z < Z; ++z) idx(0, 0, z) = axes[2][z];
  auto complete = [&](VertexId a, VertexId b, VertexId diag) -> VertexId {
    auto cn = common_neighbors(g, a, b);
    cn.erase(std::remove(cn.begin(), cn.end(), diag), cn.end());
    return cn.size() == 1 ? cn[0] : -1;
  };
  for (int z = 0; z < Z; ++z)
    for (int y = 0; y < Y; ++y)
      for (int x = 0; x < X; ++x) {
        if (idx(x, y, z) >= 0) continue;
        VertexId v;
        if (x > 0 && y > 0)
          v = complete(idx(x - 1, y, z), idx(x, y - 1, z), idx(x - 1, y - 1, z));
        else if (x > 0)
          v = complete(idx(x - 1, y, z), idx(x, y, z - 1), idx(x - 1, y, z - 1));
        else
          v = complete(idx(x, y - 1, z), idx(x, y, z - 1), idx(x, y - 1, z - 1));
        if (v < 0) return std::nullopt;
        idx(x, y, z) = v;
      }
  std::vector<Point> pos(n);
  std::vector<char> hit(n, 0);
  for (int z = 0; z < Z; ++z)
    for (int y = 0; y < Y; ++y)
      for (int x = 0; x < X; ++x) {
        const VertexId v = idx(x, y, z);
        if (hit[v]) return std::nullopt;
        hit[v] = 1;
        pos[v] = {x, y, z};
      }
  if (!matches_box(g, pos, {X, Y, Z})) return std::nullopt;
  GridShape3 s{{X, Y, Z}, Embedding{3, std::move(pos)}};
  std::sort(std::begin(s.dims), std::end(s.dims));
  return s;
}

RecognitionResult recognize_12(const Graph& g) {
  require_connected(g, "recognize_12");
  require_degrees(g, DegreeSet{1, 2}, "recognize_12");
  const int n = g.vertex_count();
  if (auto order = path_order(g)) {
    Embedding e{2, std::vector<Point>(n)};
    for (int i = 0; i < n; ++i) e.points[(*order)[i]] = {i, 0, 0};
    return yes(std::move(e), "path");
  }
  if (n % 2 == 1) return no("odd-cycle");
  const int k = n / 2;
  std::vector<VertexId> around{0};
  VertexId prev = -1;
  while (static_cast<int>(around.size()) < n) {
    const VertexId v = around.back();
    const VertexId next = g.neighbors(v)[0] != prev ? g.neighbors(v)[0] : g.neighbors(v)[1];
    prev = v;
    around.push_back(next);
  }
  Embedding e{2, std::vector<Point>(n)};
  for (int i = 0; i < n; ++i)
    e.points[around[i]] = i < k ? Point{i, 0, 0} : Point{n - 1 - i, 1, 0};
  return yes(std::move(e), "even-cycle");
}

RecognitionResult recognize_34(const Graph& g) {
  require_degrees(g, DegreeSet{3, 4}, "recognize_34");
  if (g.vertex_count() < 2) throw Error("recognize_34 requires min degree 3");
  return no("min-degree-3");
}

RecognitionResult recognize_456_3d(const Graph& g) {
  if (g.vertex_count() == 0 || g.min_degree() < 4)
    throw Error("recognize_456_3d requires min degree 4");
  return no("min-degree-4");
}

namespace {

std::vector<VertexId> vertices_of_degree(const Graph& g, int d) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == d) out.push_back(v);
  return out;
}

}  // namespace

RecognitionResult recognize_14(const Graph& g) {
  require_connected(g, "recognize_14");
  require_degrees(g, DegreeSet{1, 4}, "recognize_14");
  const auto core = vertices_of_degree(g, 4);
  if (core.empty()) return recognize_12(g);
  const Component sub = induced_subgraph(g, core);
  const auto grid = is_grid(sub.graph);
  if (!grid) return no("core-not-grid");
  const std::vector<Point> priority{{0, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {1, 0, 0}};
  auto e = place_leaves(g, core, grid->embedding, priority, 2);
  if (!e) return no("core-not-grid");
  return yes(std::move(*e), "grid-core");
}

RecognitionResult recognize_16_3d(const Graph& g) {
  require_connected(g, "recognize_16_3d");
  require_degrees(g, DegreeSet{1, 6}, "recognize_16_3d");
  const auto core = vertices_of_degree(g, 6);
  if (core.empty()) {
    auto r = recognize_12(g);
    if (r.witness) r.witness->dim = 3;
    return r;
  }
  const Component sub = induced_subgraph(g, core);
  const auto grid = is_grid_3d(sub.graph);
  if (!grid) return no("core-not-grid");
  const std::vector<Point> priority{{0, 1, 0},  {-1, 0, 0}, {0, -1, 0},
                                    {1, 0, 0},  {0, 0, 1},  {0, 0, -1}};
  auto e = place_leaves(g, core, grid->embedding, priority, 3);
  if (!e) return no("core-not-grid");
  return yes(std::move(*e), "grid-core");
}

namespace {

RecognitionResult recognize_component(const Graph& g, int dim,
                                      std::optional<std::uint64_t> budget) {
  if (g.vertex_count() == 1) return yes(Embedding{dim, {Point{}}}, "single-vertex");
  const DegreeSet d = degree_set(g);
  RecognitionResult r;
  if (d.max() > 2 * dim) {
    r = no("degree-bound");
  } else if (d.subset_of(DegreeSet{1, 2})) {
    r = recognize_12(g);
    if (r.witness) r.witness->dim = dim;
  } else if (dim == 2 && d.min() >= 3) {
    r = recognize_34(g);
  } else if (dim == 2 && d == DegreeSet{1, 4}) {
    r = recognize_14(g);
  } else if (dim == 3 && d.min() >= 4) {
    r = recognize_456_3d(g);
  } else if (dim == 3 && d == DegreeSet{1, 6}) {
    r = recognize_16_3d(g);
  } else {
    SolveConstraints c;
    c.node_budget = budget;
    SolveResult s = solve(g, dim, c);
    r.verdict = s.verdict;
    r.witness = std::move(s.embedding);
    r.method = "search";
  }
  if (d.max() <= 2 * dim) r.classification = classify(d, dim);
  return r;
}

}  // namespace

RecognitionResult recognize(const Graph& g, int dim, std::optional<std::uint64_t> budget) {
  if (dim != 2 && dim != 3) throw Error("dimension must be 2 or 3");
  RecognitionResult out{Verdict::Yes, Embedding{dim, std::vector<Point>(g.vertex_count())},
                        "", std::nullopt};
  const auto parts = connected_components(g);
  std::vector<RecognitionResult> results(parts.size());
#pragma omp parallel for schedule(dynamic) if (parts.size() > 1)
  for (std::size_t i = 0; i < parts.size(); ++i)
    results[i] = recognize_component(parts[i].graph, dim, budget);
  int offset = 0;
  std::set<std::string> methods;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& r = results[i];
    methods.insert(r.method);
    if (r.verdict == Verdict::No) out.verdict = Verdict::No;
    else if (r.verdict == Verdict::BudgetExceeded && out.verdict == Verdict::Yes)
      out.verdict = Verdict::BudgetExceeded;
    if (r.verdict != Verdict::Yes) continue;
    const auto [lo, hi] = r.witness->bounds();
    for (std::size_t v = 0; v < parts[i].original.size(); ++v)
      out.witness->points[parts[i].original[v]] =
          r.witness->points[v] - lo + Point{offset, 0, 0};
    offset += hi.x - lo.x + 2;
  }
  if (out.verdict != Verdict::Yes) out.witness.reset();
  for (const auto& m : methods) out.method += (out.method.empty() ? "" : "+") + m;
  if (parts.size() == 1) out.classification = results[0].classification;
  if (!g.empty() && out.method.empty()) out.method = "empty";
  if (g.empty()) out.method = "empty";
  return out;
}

}  // namespace pgr
