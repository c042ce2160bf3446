// Builds the gadget catalog under data/gadgets. The square and the windmill
// are written out directly; the double ladder, U-tree and three-plug are
// found by seeded random search and kept only when verify_gadget passes.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include <CLI11.hpp>

#include "pgr/gadgets.hpp"
#include "pgr/io.hpp"

using namespace pgr;

namespace {

struct Builder {
  std::vector<Point> pts;
  std::map<Point, int> id;
  std::vector<std::pair<int, int>> edges;

  int at(Point p) {
    auto [it, fresh] = id.emplace(p, static_cast<int>(pts.size()));
    if (fresh) pts.push_back(p);
    return it->second;
  }
  void link(Point a, Point b) { edges.emplace_back(at(a), at(b)); }

  Gadget finish(GadgetKind kind, const std::vector<std::pair<std::string, Point>>& ics,
                Point footprint, DegreeSet degrees, bool oriented) const {
    Gadget g;
    g.kind = kind;
    g.graph = Graph(static_cast<int>(pts.size()));
    for (auto [u, v] : edges) g.graph.add_edge(u, v);
    g.drawing = Embedding{2, pts};
    int order = 0;
    for (const auto& [label, p] : ics) {
      const Orient axis = label == "x" || label == "z" ? Orient::Horizontal : Orient::Vertical;
      g.interconnectors.push_back({id.at(p), label, axis, order++});
    }
    g.footprint = footprint;
    g.degree_set = degrees;
    g.oriented = oriented;
    return g;
  }
};

const Point kDirs[4] = {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};

bool inside(Point p, int side) { return p.x >= 0 && p.y >= 0 && p.x < side && p.y < side; }

Gadget square() {
  Builder b;
  b.link({0, 1}, {1, 1});
  b.link({1, 1}, {1, 0});
  b.link({1, 0}, {0, 0});
  b.link({0, 0}, {0, 1});
  // Opposite corners share an axis role: TL/BR horizontal, TR/BL vertical.
  return b.finish(GadgetKind::Square, {{"x", {0, 1}}, {"y", {1, 1}}, {"z", {1, 0}}, {"w", {0, 0}}},
                  {2, 2}, {2}, false);
}

Gadget windmill() {
  Builder b;
  const Point c{3, 3};
  b.at(c);
  for (int k = 0; k < 4; ++k) {
    const Point d = kDirs[k], side = kDirs[(k + 1) % 4];
    auto step = [&](int n, int m) { return Point{c.x + n * d.x + m * side.x, c.y + n * d.y + m * side.y}; };
    b.link(c, step(1, 0));
    b.link(step(1, 0), step(1, 1));  // pinwheel blade
    b.link(step(1, 0), step(2, 0));
    b.link(step(2, 0), step(2, 1));
    b.link(step(2, 0), step(2, -1));
    b.link(step(2, 0), step(3, 0));
    b.link(step(3, 0), step(3, 1));
    b.link(step(3, 0), step(3, -1));
  }
  return b.finish(GadgetKind::Windmill, {{"x", {6, 3}}, {"y", {3, 6}}, {"z", {0, 3}}, {"w", {3, 0}}},
                  {7, 7}, {1, 3, 4}, false);
}

/// Random subgraph of the side x side grid on every point, degrees in {2,3},
/// interconnectors of degree 2.
std::optional<Gadget> double_ladder_candidate(std::mt19937& rng) {
  const int side = 5;
  const std::vector<std::pair<std::string, Point>> ics = {
      {"x", {4, 2}}, {"y", {2, 4}}, {"z", {0, 2}}, {"w", {2, 0}}};
  std::set<Point> ic_points;
  for (const auto& [l, p] : ics) ic_points.insert(p);
  std::vector<std::pair<Point, Point>> all;
  for (int x = 0; x < side; ++x)
    for (int y = 0; y < side; ++y) {
      if (x + 1 < side) all.push_back({{x, y}, {x + 1, y}});
      if (y + 1 < side) all.push_back({{x, y}, {x, y + 1}});
    }
  std::shuffle(all.begin(), all.end(), rng);
  std::map<Point, int> deg;
  for (const auto& [a, b] : all) ++deg[a], ++deg[b];
  auto cap = [&](Point p) { return ic_points.count(p) ? 2 : 3; };
  std::vector<std::pair<Point, Point>> kept;
  for (const auto& e : all) {
    const auto& [a, b] = e;
    if ((deg[a] > cap(a) || deg[b] > cap(b)) && deg[a] > 2 && deg[b] > 2) {
      --deg[a];
      --deg[b];
    } else {
      kept.push_back(e);
    }
  }
  for (const auto& [p, d] : deg)
    if (d > cap(p) || d < 2) return std::nullopt;
  Builder bld;
  for (int x = 0; x < side; ++x)
    for (int y = 0; y < side; ++y) bld.at({x, y});
  for (const auto& [a, b] : kept) bld.link(a, b);
  Gadget g = bld.finish(GadgetKind::DoubleLadder, ics, {5, 5}, {2, 3}, false);
  if (!is_connected(g.graph)) return std::nullopt;
  return g;
}

/// Edge toggling walk on the 5x5 grid that never increases the number of
/// embeddings, restarted from random candidates.
std::optional<Gadget> double_ladder_walk(std::mt19937& rng) {
  std::optional<Gadget> g;
  while (!g) g = double_ladder_candidate(rng);
  const int side = 5;
  std::vector<std::pair<Point, Point>> all;
  for (int x = 0; x < side; ++x)
    for (int y = 0; y < side; ++y) {
      if (x + 1 < side) all.push_back({{x, y}, {x + 1, y}});
      if (y + 1 < side) all.push_back({{x, y}, {x, y + 1}});
    }
  std::map<Point, int> id;
  for (int v = 0; v < g->graph.vertex_count(); ++v) id[g->drawing.points[v]] = v;
  std::set<std::pair<int, int>> on;
  for (const auto& e : g->graph.edges()) on.insert({e.u, e.v});
  std::set<int> ics;
  for (const auto& c : g->interconnectors) ics.insert(c.id);
  auto count = [&](const std::set<std::pair<int, int>>& es) -> std::size_t {
    Graph h(side * side);
    for (auto [u, v] : es) h.add_edge(u, v);
    for (int v = 0; v < h.vertex_count(); ++v) {
      const int cap = ics.count(v) ? 2 : 3;
      if (h.degree(v) < 2 || h.degree(v) > cap) return SIZE_MAX;
    }
    if (!is_connected(h)) return SIZE_MAX;
    SolveConstraints c;
    c.node_budget = 200'000;
    const auto en = enumerate_embeddings(h, 2, 64, c);
    return en.complete ? en.drawings.size() : 64;
  };
  std::size_t best = count(on);
  for (int step = 0; step < 3000 && best > 1; ++step) {
    const auto& [a, b] = all[rng() % all.size()];
    std::pair<int, int> e{std::min(id[a], id[b]), std::max(id[a], id[b])};
    auto next = on;
    if (!next.erase(e)) next.insert(e);
    // Swap moves keep degrees balanced.
    if (rng() % 2) {
      const auto& [c2, d2] = all[rng() % all.size()];
      std::pair<int, int> f{std::min(id[c2], id[d2]), std::max(id[c2], id[d2])};
      if (!next.erase(f)) next.insert(f);
    }
    const std::size_t n = count(next);
    if (n <= best) {
      best = n;
      on = std::move(next);
    }
  }
  if (std::getenv("PGR_DESIGN_TRACE")) std::cerr << "walk best " << best << "\n";
  if (best != 1) return std::nullopt;
  Gadget out = *g;
  out.graph = Graph(side * side);
  for (auto [u, v] : on) out.graph.add_edge(u, v);
  return out;
}

/// Random tree grown from the box center. Interconnectors take a parent and
/// `ic_children` children; other vertices take `child_counts` children.
std::optional<Builder> grow_tree(std::mt19937& rng, int side,
                                 const std::vector<std::pair<std::string, Point>>& ics,
                                 const std::vector<int>& child_counts, int ic_children,
                                 int root_children, double stop,
                                 const std::set<Point>& blocked = {}) {
  std::set<Point> ic_points;
  for (const auto& [l, p] : ics) ic_points.insert(p);
  Builder b;
  const Point root{side / 2, side / 2};
  b.at(root);
  std::set<Point> used = blocked;
  used.insert(root);
  std::vector<std::pair<Point, int>> open{{root, root_children}};
  std::uniform_real_distribution<double> U(0, 1);
  while (!open.empty()) {
    std::swap(open[rng() % open.size()], open.back());
    auto [v, want] = open.back();
    open.pop_back();
    if (want < 0) want = child_counts[rng() % child_counts.size()];
    if (want == 0) continue;
    std::vector<Point> free;
    for (const Point& d : kDirs) {
      const Point p = v + d;
      if (inside(p, side) && !used.count(p)) free.push_back(p);
    }
    // Claim adjacent interconnectors first.
    std::stable_partition(free.begin(), free.end(), [&](Point p) { return ic_points.count(p) > 0; });
    std::shuffle(free.begin() + std::count_if(free.begin(), free.end(),
                                              [&](Point p) { return ic_points.count(p) > 0; }),
                 free.end(), rng);
    if (static_cast<int>(free.size()) < want) {
      if (ic_points.count(v)) return std::nullopt;
      continue;  // stays a leaf when it cannot branch
    }
    if (U(rng) < stop && !ic_points.count(v) && v != root) continue;
    for (int k = 0; k < want; ++k) {
      const Point p = free[k];
      used.insert(p);
      b.link(v, p);
      open.push_back({p, ic_points.count(p) ? ic_children : -1});
    }
  }
  for (const Point& p : ic_points)
    if (!used.count(p)) return std::nullopt;
  return b;
}

std::optional<Gadget> utree_candidate(std::mt19937& rng, int side) {
  const int m = side / 2, t = side - 1;
  const std::vector<std::pair<std::string, Point>> ics = {
      {"x", {t, m}}, {"y", {m, t}}, {"z", {0, m}}, {"w", {m, 0}}};
  auto b = grow_tree(rng, side, ics, {1, 2, 2}, static_cast<int>(rng() % 2), 3, 0.1);
  if (!b) return std::nullopt;
  Gadget g = b->finish(GadgetKind::UTree, ics, {side, side}, {1, 2, 3}, true);
  if (!degree_set(g.graph).subset_of(g.degree_set)) return std::nullopt;
  return g;
}

std::optional<Gadget> three_plug_candidate(std::mt19937& rng, int side) {
  const int m = side / 2, t = side - 1;
  const std::vector<std::pair<std::string, Point>> ics = {{"x", {t, m}}, {"y", {m, t}}, {"z", {0, m}}};
  // Each interconnector keeps a lateral neighbor free for its unused leaf.
  std::map<std::string, Point> slots;
  std::set<Point> blocked;
  for (const auto& [label, p] : ics) {
    const Point along = label == "y" ? Point{1, 0, 0} : Point{0, 1, 0};
    const Point q = rng() % 2 ? p + along : p - along;
    slots[label] = q;
    blocked.insert(q);
  }
  auto b = grow_tree(rng, side, ics, {0, 2, 2}, 1, 3, 0.05, blocked);
  if (!b) return std::nullopt;
  Gadget g = b->finish(GadgetKind::ThreePlug, ics, {side, side}, {1, 3}, true);
  for (const auto& ic : g.interconnectors)
    if (g.graph.degree(ic.id) != 2) return std::nullopt;
  g.reserved_slot = slots;
  for (int v = 0; v < g.graph.vertex_count(); ++v) {
    const bool ic = std::any_of(g.interconnectors.begin(), g.interconnectors.end(),
                                [&](const Interconnector& c) { return c.id == v; });
    if (!ic && g.graph.degree(v) == 2) return std::nullopt;
  }
  g.pair_footprint = Point{2 * side, side};
  return g;
}

/// Gadget with one extra leaf on `leaf`, placed at `slot`.
Gadget with_leaf(const Gadget& g, VertexId leaf, Point slot) {
  Gadget h = g;
  const VertexId w = h.graph.add_vertex();
  h.graph.add_edge(leaf, w);
  h.drawing.points.push_back(slot);
  h.degree_set.insert(2);
  return h;
}

template <class Make>
std::optional<Gadget> search(const std::string& name, std::mt19937& rng, int tries, Make make,
                             std::uint64_t budget) {
  int candidates = 0;
  for (int t = 0; t < tries; ++t) {
    auto g = make(rng);
    if (!g) continue;
    ++candidates;
    const GadgetReport r = verify_gadget(*g, budget);
    if (std::getenv("PGR_DESIGN_TRACE") && !r.failures.empty())
      std::cerr << name << " reject: " << r.failures.front() << "\n";
    if (r.passed) {
      std::cerr << name << ": found after " << t + 1 << " tries (" << candidates << " candidates, "
                << g->graph.vertex_count() << " vertices, " << r.embeddings << " embeddings)\n";
      return g;
    }
  }
  std::cerr << name << ": nothing in " << tries << " tries (" << candidates << " candidates)\n";
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for gadget catalog entries"};
  std::string out = std::string(PGR_DATA_DIR) + "/gadgets";
  std::uint32_t seed = 1;
  int tries = 200000;
  app.add_option("--out", out, "output directory");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--tries", tries, "candidates per gadget");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out);
  std::mt19937 rng(seed);
  std::map<std::string, Gadget> found;
  found["square"] = square();
  found["windmill"] = windmill();

  if (auto g = search("double_ladder", rng, tries / 100, double_ladder_walk, 2'000'000)) found["double_ladder"] = *g;
  for (int side : {5, 7}) {
    auto g = search("utree", rng, tries, [&](std::mt19937& r) { return utree_candidate(r, side); }, 2'000'000);
    if (g) {
      found["utree"] = *g;
      break;
    }
  }
  auto tp_make = [&](std::mt19937& r) -> std::optional<Gadget> {
    auto g = three_plug_candidate(r, 7);
    if (!g) return g;
    // Keep only candidates with a leaf that strictifies without moving anything.
    for (int v = 0; v < g->graph.vertex_count(); ++v) {
      if (g->graph.degree(v) != 1) continue;
      for (const Point& d : kDirs) {
        const Point p = g->drawing.points[v] + d;
        if (!inside(p, 7)) continue;
        bool taken = false;
        for (const Point& q : g->drawing.points) taken |= q == p;
        for (const auto& [l, s] : g->reserved_slot) taken |= s == p;
        if (taken) continue;
        Gadget h = with_leaf(*g, v, p);
        h.pair_footprint.reset();
        if (verify_gadget(h, 2'000'000).passed) {
          g->strict_leaf = v;
          g->strict_slot = p;
          return g;
        }
      }
    }
    return std::nullopt;
  };
  if (auto g = search("three_plug", rng, tries, tp_make, 2'000'000)) found["three_plug"] = *g;

  for (const auto& [name, g] : found) {
    const GadgetReport r = verify_gadget(g);
    std::cerr << name << ": " << (r.passed ? "pass" : "FAIL") << "\n";
    for (const auto& f : r.failures) std::cerr << "  " << f << "\n";
    write_file(out + "/" + name + ".json", gadget_to_json(g).dump(1) + "\n");
  }
  return found.size() == 5 ? 0 : 1;
}
