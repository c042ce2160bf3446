#include "pgr/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <set>
#include <unordered_map>

namespace pgr {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

int worker_threads() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("PGR_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(1, n);
}

namespace {

constexpr Point kDir[6] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};

/// Point -> vertex lookup. Dense array when the coordinate cube is small.
class Occupancy {
 public:
  Occupancy(int n, int dim) : radius_(n + 1), dim_(dim) {
    side_ = 2 * radius_ + 1;
    std::uint64_t cells = 1;
    for (int a = 0; a < dim; ++a) cells *= side_;
    if (cells <= (1u << 22)) dense_.assign(cells, -1);
  }

  int at(const Point& p) const {
    if (!dense_.empty()) return dense_[index(p)];
    auto it = sparse_.find(key(p));
    return it == sparse_.end() ? -1 : it->second;
  }
  void set(const Point& p, int v) {
    if (!dense_.empty())
      dense_[index(p)] = v;
    else
      sparse_[key(p)] = v;
  }
  void clear(const Point& p) {
    if (!dense_.empty())
      dense_[index(p)] = -1;
    else
      sparse_.erase(key(p));
  }

 private:
  std::size_t index(const Point& p) const {
    std::size_t i = static_cast<std::size_t>(p.x + radius_);
    i = i * side_ + static_cast<std::size_t>(p.y + radius_);
    if (dim_ == 3) i = i * side_ + static_cast<std::size_t>(p.z + radius_);
    return i;
  }
  static std::uint64_t key(const Point& p) {
    auto u = [](int c) { return static_cast<std::uint64_t>(static_cast<std::uint32_t>(c) & 0x1FFFFF); };
    return (u(p.x) << 42) | (u(p.y) << 21) | u(p.z);
  }
  int radius_;
  int dim_;
  std::size_t side_ = 0;
  std::vector<int> dense_;
  std::unordered_map<std::uint64_t, int> sparse_;
};

struct Plan {
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<int> twin_prev;  // previous interchangeable pendant leaf, or -1
  std::vector<int> twin_head;
};

Plan make_plan(const Graph& g, const OrientationMap* orient, bool break_twins) {
  const int n = g.vertex_count();
  Plan p;
  p.parent.assign(n, -1);
  p.parent_edge.assign(n, -1);
  p.twin_prev.assign(n, -1);
  p.twin_head.assign(n, -1);
  VertexId root = 0;
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  std::vector<char> seen(n, 0);
  p.order.push_back(root);
  seen[root] = 1;
  for (std::size_t i = 0; i < p.order.size(); ++i) {
    const VertexId v = p.order[i];
    // last pendant leaf per label class among v's children
    int last_leaf[3] = {-1, -1, -1};
    const auto& nb = g.neighbors(v);
    const auto& ie = g.incident_edges(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const VertexId w = nb[k];
      if (seen[w]) continue;
      seen[w] = 1;
      p.parent[w] = v;
      p.parent_edge[w] = ie[k];
      p.order.push_back(w);
      if (break_twins && g.degree(w) == 1) {
        const int cls = orient ? static_cast<int>((*orient)[ie[k]]) + 1 : 0;
        p.twin_prev[w] = last_leaf[cls];
        p.twin_head[w] = last_leaf[cls] < 0 ? w : p.twin_head[last_leaf[cls]];
        last_leaf[cls] = w;
      }
    }
  }
  return p;
}

enum class Stop { None, Found, Exhausted, Budget, Cancelled };

/// Backtracking state for one search task.
class Search {
 public:
  Search(const Graph& g, int dim, const SolveConstraints& c, const Plan& plan)
      : g_(g), dim_(dim), plan_(plan), occ_(g.vertex_count(), dim) {
    const int n = g.vertex_count();
    orient_ = c.orientation ? &*c.orientation : nullptr;
    if (c.box) box_ = *c.box;
    budget_ = c.node_budget.value_or(UINT64_MAX);
    interchangeable_ = orient_ == nullptr;
    if (interchangeable_ && box_)
      for (int a = 1; a < dim; ++a)
        if ((*box_)[a] != (*box_)[0]) interchangeable_ = false;
    pos_.assign(n, Point{});
    placed_.assign(n, 0);
    dir_.assign(n, -1);
    group_ordered_.assign(n, 0);
    unplaced_.assign(n, {0, 0, 0});
    for (VertexId v = 0; v < n; ++v)
      for (std::size_t k = 0; k < g.neighbors(v).size(); ++k) {
        ++unplaced_[v][0];
        if (orient_) ++unplaced_[v][1 + axis_of(g.incident_edges(v)[k])];
      }
    saved_.resize(n + 1);
    next_dir_.assign(n + 1, 0);
    level_.assign(n, 0);
    for (int k = 0; k < n; ++k) level_[plan_.order[k]] = k;
    conflict_.resize(n + 1);
    conflict_all_.assign(n + 1, 0);
    place_root();
  }

  std::uint64_t nodes() const { return nodes_; }

  Embedding embedding() const { return Embedding{dim_, pos_}; }

  /// Places the given direction sequence for order positions 1..prefix.size().
  bool replay(const std::vector<int>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (!try_place(static_cast<int>(i) + 1, prefix[i])) return false;
    depth_ = static_cast<int>(prefix.size()) + 1;
    floor_ = depth_;
    return true;
  }

  /// Valid directions at the current depth, without changing state.
  std::vector<int> extensions() {
    std::vector<int> out;
    if (depth_ >= static_cast<int>(plan_.order.size())) return out;
    for (int d = 0; d < 2 * dim_; ++d)
      if (try_place(depth_, d)) {
        out.push_back(d);
        undo(depth_);
      }
    return out;
  }

  /// Continues the depth-first search to the next complete embedding.
  /// `cancel` is polled every few thousand nodes.
  Stop run(const std::function<bool()>& cancel = {}) {
    const int n = static_cast<int>(plan_.order.size());
    if (resume_) {
      // Step past the previously reported solution. Levels above it may
      // not be jumped over any more.
      resume_ = false;
      std::fill(conflict_all_.begin(), conflict_all_.end(), 1);
      if (depth_ == floor_) return Stop::Exhausted;
      --depth_;
      undo(depth_);
    }
    while (true) {
      if (depth_ == n) {
        resume_ = true;
        return Stop::Found;
      }
      bool advanced = false;
      for (int d = next_dir_[depth_]; d < 2 * dim_; ++d) {
        if (try_place(depth_, d)) {
          next_dir_[depth_] = d + 1;
          ++depth_;
          if (depth_ < n) enter(depth_);
          advanced = true;
          break;
        }
        blame(depth_);
      }
      if (advanced) {
        if (nodes_ > budget_) return Stop::Budget;
        if (cancel && (nodes_ & 0xFFF) == 0 && cancel()) return Stop::Cancelled;
        continue;
      }
      // dead end: jump back to the deepest level that caused it
      int h = -1;
      if (conflict_all_[depth_]) {
        h = depth_ - 1;
      } else {
        for (int k : conflict_[depth_]) h = std::max(h, k);
      }
      if (h < floor_) return Stop::Exhausted;
      if (conflict_all_[depth_]) {
        conflict_all_[h] = 1;
      } else if (!conflict_all_[h]) {
        for (int k : conflict_[depth_])
          if (k != h) add_conflict(h, k);
      }
      while (depth_ > h) {
        --depth_;
        undo(depth_);
      }
    }
  }

 private:
  struct Saved {
    int used_axes;
    int sign_fixed;
    int fixed_level;
    Point lo, hi;
  };

  int axis_of(EdgeId e) const { return (*orient_)[e] == Orient::Vertical ? 1 : 0; }

  void enter(int k) {
    next_dir_[k] = 0;
    conflict_[k].clear();
    conflict_all_[k] = 0;
  }

  void add_conflict(int k, int level) {
    auto& c = conflict_[k];
    if (std::find(c.begin(), c.end(), level) == c.end()) c.push_back(level);
  }

  /// Folds the reason of the last rejected placement into level k's set.
  void blame(int k) {
    if (conflict_all_[k]) return;
    if (why_all_) {
      conflict_all_[k] = 1;
      return;
    }
    for (VertexId u : why_) {
      const int l = level_[u];
      if (l > 0 && l < k) add_conflict(k, l);
    }
    for (int l = 1; l <= why_prefix_ && l < k; ++l) add_conflict(k, l);
  }

  void reject_all() { why_all_ = true; }

  void blame_surroundings(VertexId w) {
    why_.push_back(w);
    for (int d = 0; d < 2 * dim_; ++d) {
      const int u = occ_.at(pos_[w] + kDir[d]);
      if (u >= 0) why_.push_back(u);
    }
  }

  void place_root() {
    const int n = g_.vertex_count();
    if (n == 0) return;
    const VertexId r = plan_.order[0];
    pos_[r] = Point{};
    placed_[r] = 1;
    occ_.set(pos_[r], r);
    lo_ = hi_ = Point{};
    for (VertexId w : g_.neighbors(r)) --unplaced_[w][0];
    if (orient_)
      for (std::size_t k = 0; k < g_.neighbors(r).size(); ++k)
        --unplaced_[g_.neighbors(r)[k]][1 + axis_of(g_.incident_edges(r)[k])];
    depth_ = 1;
    floor_ = 1;
    if (n > 1) enter(1);
  }

  bool fully_fixed() const {
    if (interchangeable_) return used_axes_ == dim_;
    return sign_fixed_ == (1 << (orient_ ? 2 : dim_)) - 1;
  }

  bool has_capacity(VertexId w) const {
    if (orient_) {
      int free_axis[2] = {0, 0};
      for (int d = 0; d < 4; ++d)
        if (occ_.at(pos_[w] + kDir[d]) < 0) ++free_axis[d / 2];
      return free_axis[0] >= unplaced_[w][1] && free_axis[1] >= unplaced_[w][2];
    }
    int free = 0;
    for (int d = 0; d < 2 * dim_; ++d)
      if (occ_.at(pos_[w] + kDir[d]) < 0) ++free;
    return free >= unplaced_[w][0];
  }

  void adjust_unplaced(VertexId v, int delta) {
    const auto& nb = g_.neighbors(v);
    const auto& ie = g_.incident_edges(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      unplaced_[nb[k]][0] += delta;
      if (orient_) unplaced_[nb[k]][1 + axis_of(ie[k])] += delta;
    }
  }

  bool try_place(int k, int d) {
    const VertexId v = plan_.order[k];
    const VertexId p = plan_.parent[v];
    const int axis = d / 2;
    const bool negative = d & 1;
    why_.clear();
    why_all_ = false;
    why_prefix_ = 0;
    if (orient_ && axis != axis_of(plan_.parent_edge[v])) return false;
    if (orient_ && axis > 1) return false;
    why_.push_back(p);

    // lattice symmetry breaking
    int used_axes = used_axes_, sign_fixed = sign_fixed_;
    if (interchangeable_) {
      if (axis > used_axes) return reject_all(), false;
      if (axis == used_axes) {
        if (negative) return reject_all(), false;
        ++used_axes;
      }
    } else if (!(sign_fixed & (1 << axis))) {
      if (negative) return reject_all(), false;
      sign_fixed |= 1 << axis;
    }

    // interchangeable pendant leaves take increasing directions
    const int prev_twin = plan_.twin_prev[v];
    if (prev_twin >= 0 && group_ordered_[plan_.twin_head[v]] && d <= dir_[prev_twin]) {
      why_.push_back(prev_twin);
      why_prefix_ = fixed_level_;
      return false;
    }

    const Point q = pos_[p] + kDir[d];
    if (const int u = occ_.at(q); u >= 0) {
      why_.push_back(u);
      return false;
    }

    Point lo = lo_, hi = hi_;
    for (int a = 0; a < dim_; ++a) {
      lo[a] = std::min(lo[a], q[a]);
      hi[a] = std::max(hi[a], q[a]);
    }
    if (box_)
      for (int a = 0; a < dim_; ++a)
        if (hi[a] - lo[a] + 1 > (*box_)[a]) return reject_all(), false;

    const auto& nb = g_.neighbors(v);
    const auto& ie = g_.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const VertexId w = nb[i];
      if (placed_[w]) {
        if (w == p) continue;
        const Point delta = pos_[w] - q;
        if (manhattan(pos_[w], q) != 1 || (orient_ && std::abs(delta[axis_of(ie[i])]) != 1)) {
          why_.push_back(w);
          return false;
        }
      } else {
        // an unplaced neighbor must end up next to all its placed neighbors
        for (VertexId x : g_.neighbors(w))
          if (x != v && placed_[x] && manhattan(pos_[x], q) != 2) {
            why_.push_back(x);
            return false;
          }
      }
    }

    // commit
    saved_[k] = {used_axes_, sign_fixed_, fixed_level_, lo_, hi_};
    used_axes_ = used_axes;
    sign_fixed_ = sign_fixed;
    if (fixed_level_ == 0 && fully_fixed()) fixed_level_ = k;
    lo_ = lo;
    hi_ = hi;
    pos_[v] = q;
    placed_[v] = 1;
    dir_[v] = d;
    occ_.set(q, v);
    adjust_unplaced(v, -1);
    if (prev_twin < 0 && plan_.twin_head[v] == v) group_ordered_[v] = fully_fixed();
    ++nodes_;

    bool ok = has_capacity(v);
    if (!ok) blame_surroundings(v);
    for (int dd = 0; ok && dd < 2 * dim_; ++dd) {
      const int w = occ_.at(q + kDir[dd]);
      if (w >= 0 && !has_capacity(w)) {
        ok = false;
        blame_surroundings(w);
      }
    }
    if (!ok) {
      undo(k);
      return false;
    }
    return true;
  }

  void undo(int k) {
    const VertexId v = plan_.order[k];
    occ_.clear(pos_[v]);
    placed_[v] = 0;
    dir_[v] = -1;
    adjust_unplaced(v, +1);
    used_axes_ = saved_[k].used_axes;
    sign_fixed_ = saved_[k].sign_fixed;
    fixed_level_ = saved_[k].fixed_level;
    lo_ = saved_[k].lo;
    hi_ = saved_[k].hi;
  }

  const Graph& g_;
  int dim_;
  const Plan& plan_;
  const OrientationMap* orient_ = nullptr;
  std::optional<Point> box_;
  std::uint64_t budget_ = UINT64_MAX;
  bool interchangeable_ = true;

  Occupancy occ_;
  std::vector<Point> pos_;
  std::vector<char> placed_;
  std::vector<int> dir_;
  std::vector<char> group_ordered_;
  std::vector<std::array<int, 3>> unplaced_;  // total, horizontal, vertical
  std::vector<Saved> saved_;
  std::vector<int> next_dir_;
  std::vector<int> level_;  // vertex -> position in the order
  std::vector<std::vector<int>> conflict_;
  std::vector<char> conflict_all_;
  std::vector<VertexId> why_;
  bool why_all_ = false;
  int why_prefix_ = 0;
  int fixed_level_ = 0;  // level at which the lattice symmetry was fully broken
  int used_axes_ = 0;
  int sign_fixed_ = 0;
  Point lo_, hi_;
  int depth_ = 1;
  int floor_ = 1;
  bool resume_ = false;
  std::uint64_t nodes_ = 0;
};

void check_inputs(const Graph& g, int dim, const SolveConstraints& c) {
  if (dim != 2 && dim != 3) throw Error("dimension must be 2 or 3");
  if (c.orientation) {
    if (dim != 2) throw Error("orientation constraints are only defined in 2D");
    if (static_cast<int>(c.orientation->labels.size()) != g.edge_count())
      throw Error("orientation does not match the graph's edge set");
  }
  if (!is_connected(g)) throw Error("solver input must be connected");
}

/// Verdict settled without search, if any.
std::optional<SolveResult> quick_verdict(const Graph& g, int dim, const SolveConstraints& c) {
  if (g.vertex_count() == 0) return SolveResult{Verdict::Yes, Embedding{dim, {}}, 0};
  if (c.prefilter && (g.max_degree() > 2 * dim || !is_bipartite(g)))
    return SolveResult{Verdict::No, std::nullopt, 0};
  return std::nullopt;
}

std::vector<std::vector<int>> split_prefixes(const Graph& g, int dim, const SolveConstraints& c,
                                             const Plan& plan, std::size_t target) {
  std::vector<std::vector<int>> frontier{{}};
  const int n = g.vertex_count();
  for (int depth = 1; depth < n && frontier.size() < target && depth <= 24; ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : frontier) {
      Search s(g, dim, c, plan);
      if (!s.replay(prefix)) continue;
      for (int d : s.extensions()) {
        next.push_back(prefix);
        next.back().push_back(d);
      }
    }
    if (next.empty()) return {};
    frontier = std::move(next);
  }
  return frontier;
}

}  // namespace

SolveResult solve_serial(const Graph& g, int dim, const SolveConstraints& c) {
  check_inputs(g, dim, c);
  if (auto q = quick_verdict(g, dim, c)) return *q;
  const Plan plan = make_plan(g, c.orientation ? &*c.orientation : nullptr, true);
  Search s(g, dim, c, plan);
  if (g.vertex_count() == 1) return {Verdict::Yes, s.embedding(), 0};
  const Stop stop = s.run();
  SolveResult r;
  r.nodes = s.nodes();
  if (stop == Stop::Found) {
    r.verdict = Verdict::Yes;
    r.embedding = s.embedding();
  } else {
    r.verdict = stop == Stop::Budget ? Verdict::BudgetExceeded : Verdict::No;
  }
  return r;
}

SolveResult solve(const Graph& g, int dim, const SolveConstraints& c) {
  check_inputs(g, dim, c);
  if (auto q = quick_verdict(g, dim, c)) return *q;
  const int threads = worker_threads();
  if (threads == 1 || g.vertex_count() < 12) return solve_serial(g, dim, c);

  const Plan plan = make_plan(g, c.orientation ? &*c.orientation : nullptr, true);
  const auto prefixes = split_prefixes(g, dim, c, plan, static_cast<std::size_t>(8 * threads));
  if (prefixes.empty()) return {Verdict::No, std::nullopt, 0};

  const int count = static_cast<int>(prefixes.size());
  std::vector<Stop> stops(count, Stop::Cancelled);
  std::vector<std::optional<Embedding>> found(count);
  std::vector<std::uint64_t> nodes(count, 0);
  std::atomic<int> best{INT_MAX};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < count; ++i) {
    if (i > best.load()) continue;
    Search s(g, dim, c, plan);
    if (!s.replay(prefixes[i])) {
      stops[i] = Stop::Exhausted;
      continue;
    }
    const Stop stop = s.run([&] { return i > best.load(); });
    stops[i] = stop;
    nodes[i] = s.nodes();
    if (stop == Stop::Found) {
      found[i] = s.embedding();
      int cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }

  SolveResult r;
  for (int i = 0; i < count; ++i) r.nodes += nodes[i];
  // The outcome is decided by the first prefix, in serial order, that did
  // not exhaust; later tasks cannot change it.
  for (int i = 0; i < count; ++i) {
    if (stops[i] == Stop::Exhausted) continue;
    if (stops[i] == Stop::Found) {
      r.verdict = Verdict::Yes;
      r.embedding = std::move(found[i]);
    } else {
      r.verdict = Verdict::BudgetExceeded;
    }
    return r;
  }
  r.verdict = Verdict::No;
  return r;
}

std::vector<SolveResult> solve_batch(std::span<const Graph> graphs, int dim,
                                     const SolveConstraints& c) {
  std::vector<SolveResult> out(graphs.size());
  const int count = static_cast<int>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_threads())
  for (int i = 0; i < count; ++i) out[i] = solve_serial(graphs[i], dim, c);
  return out;
}

VisitStatus for_each_embedding(const Graph& g, int dim, const SolveConstraints& c,
                               const std::function<bool(const Embedding&)>& visit) {
  check_inputs(g, dim, c);
  if (g.vertex_count() == 0) return visit(Embedding{dim, {}}) ? VisitStatus::Complete : VisitStatus::Stopped;
  if (c.prefilter && (g.max_degree() > 2 * dim || !is_bipartite(g))) return VisitStatus::Complete;
  const Plan plan = make_plan(g, c.orientation ? &*c.orientation : nullptr, false);
  Search s(g, dim, c, plan);
  if (g.vertex_count() == 1) return visit(s.embedding()) ? VisitStatus::Complete : VisitStatus::Stopped;
  while (true) {
    const Stop stop = s.run();
    if (stop == Stop::Exhausted) return VisitStatus::Complete;
    if (stop == Stop::Budget) return VisitStatus::BudgetExceeded;
    if (!visit(s.embedding())) return VisitStatus::Stopped;
  }
}

EnumerationResult enumerate_embeddings(const Graph& g, int dim, std::size_t limit,
                                       const SolveConstraints& c) {
  if (limit == 0) throw Error("enumeration limit must be positive");
  check_inputs(g, dim, c);
  EnumerationResult out;
  if (c.prefilter && g.vertex_count() > 0 && (g.max_degree() > 2 * dim || !is_bipartite(g))) {
    out.complete = true;
    return out;
  }
  std::set<CanonicalDrawing> seen;
  const Plan plan = make_plan(g, c.orientation ? &*c.orientation : nullptr, true);
  Search s(g, dim, c, plan);
  if (g.vertex_count() <= 1) {
    seen.insert(canonicalize(g, s.embedding()));
    out.complete = true;
  } else {
    while (true) {
      const Stop stop = s.run();
      if (stop == Stop::Exhausted) {
        out.complete = true;
        break;
      }
      if (stop == Stop::Budget) {
        out.budget_exceeded = true;
        break;
      }
      seen.insert(canonicalize(g, s.embedding()));
      if (seen.size() >= limit) break;
    }
  }
  out.nodes = s.nodes();
  out.drawings.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace pgr
