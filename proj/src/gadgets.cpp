#include "pgr/gadgets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <set>

#include "pgr/io.hpp"

#ifndef PGR_DATA_DIR
#define PGR_DATA_DIR "data"
#endif

namespace pgr {

namespace {

constexpr std::array<const char*, 5> kKindNames = {"double_ladder", "square", "three_plug",
                                                   "utree", "windmill"};

Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() < 2 || j.size() > 3) throw Error("point must be [x,y] or [x,y,z]");
  Point p{j[0].get<int>(), j[1].get<int>(), 0};
  if (j.size() == 3) p.z = j[2].get<int>();
  return p;
}

nlohmann::json point_to_json(const Point& p) { return nlohmann::json::array({p.x, p.y}); }

Orient axis_from_string(const std::string& s) {
  if (s == "H") return Orient::Horizontal;
  if (s == "V") return Orient::Vertical;
  throw Error("axis must be H or V, got '" + s + "'");
}

const char* axis_name(Orient o) { return o == Orient::Horizontal ? "H" : "V"; }

Orient axis_of(const Point& d) { return d.x != 0 ? Orient::Horizontal : Orient::Vertical; }

}  // namespace

std::string to_string(GadgetKind k) { return kKindNames[static_cast<int>(k)]; }

GadgetKind gadget_kind_from_string(const std::string& s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (s == kKindNames[i]) return static_cast<GadgetKind>(i);
  throw Error("unknown gadget kind '" + s + "'");
}

const Interconnector& Gadget::interconnector(const std::string& label) const {
  for (const auto& ic : interconnectors)
    if (ic.label == label) return ic;
  throw Error("gadget " + to_string(kind) + " has no interconnector '" + label + "'");
}

OrientationMap Gadget::drawing_orientation() const {
  OrientationMap f(graph);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    f[e] = axis_of(drawing.points[ed.v] - drawing.points[ed.u]);
  }
  return f;
}

Gadget gadget_from_json(const nlohmann::json& j) {
  Gadget g;
  g.kind = gadget_kind_from_string(j.at("kind").get<std::string>());
  g.graph = graph_from_json(j.at("graph"));
  for (const auto& ic : j.at("interconnectors")) {
    Interconnector c;
    c.id = ic.at("id").get<int>();
    c.label = ic.at("label").get<std::string>();
    c.axis = axis_from_string(ic.at("axis").get<std::string>());
    c.order = ic.at("order").get<int>();
    if (c.id < 0 || c.id >= g.graph.vertex_count()) throw Error("interconnector id out of range");
    g.interconnectors.push_back(c);
  }
  g.footprint = point_from_json(j.at("footprint"));
  if (j.contains("pair_footprint")) g.pair_footprint = point_from_json(j["pair_footprint"]);
  for (int d : j.at("degree_set")) g.degree_set.insert(d);
  g.drawing = embedding_from_json(j.at("drawing"));
  if (static_cast<int>(g.drawing.points.size()) != g.graph.vertex_count() ||
      !validate_embedding(g.graph, g.drawing))
    throw Error("gadget drawing is not an embedding of its graph");
  g.oriented = j.value("oriented", false);
  if (j.contains("reserved_slots"))
    for (const auto& [label, p] : j["reserved_slots"].items()) g.reserved_slot[label] = point_from_json(p);
  if (j.contains("strict_leaf")) {
    g.strict_leaf = j["strict_leaf"].get<int>();
    g.strict_slot = point_from_json(j.at("strict_slot"));
  }
  return g;
}

nlohmann::json gadget_to_json(const Gadget& g) {
  nlohmann::json j;
  j["kind"] = to_string(g.kind);
  j["graph"] = graph_to_json(g.graph);
  j["interconnectors"] = nlohmann::json::array();
  for (const auto& c : g.interconnectors)
    j["interconnectors"].push_back(
        {{"id", c.id}, {"label", c.label}, {"axis", axis_name(c.axis)}, {"order", c.order}});
  j["footprint"] = point_to_json(g.footprint);
  if (g.pair_footprint) j["pair_footprint"] = point_to_json(*g.pair_footprint);
  j["degree_set"] = g.degree_set.members();
  j["drawing"] = embedding_to_json(g.drawing);
  j["oriented"] = g.oriented;
  if (!g.reserved_slot.empty()) {
    j["reserved_slots"] = nlohmann::json::object();
    for (const auto& [label, p] : g.reserved_slot) j["reserved_slots"][label] = point_to_json(p);
  }
  if (g.strict_leaf) {
    j["strict_leaf"] = *g.strict_leaf;
    j["strict_slot"] = point_to_json(*g.strict_slot);
  }
  return j;
}

std::string data_dir() {
  if (const char* env = std::getenv("PGR_DATA_DIR"); env && *env) return env;
  return PGR_DATA_DIR;
}

const Gadget& catalog(GadgetKind kind) {
  static std::once_flag once;
  static std::array<Gadget, 5> entries;
  std::call_once(once, [] {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
      const std::string path = data_dir() + "/gadgets/" + kKindNames[i] + ".json";
      entries[i] = gadget_from_json(nlohmann::json::parse(read_file(path)));
      if (entries[i].kind != static_cast<GadgetKind>(i)) throw Error(path + ": kind mismatch");
    }
  });
  return entries[static_cast<int>(kind)];
}

nlohmann::json to_json(const GadgetReport& r) {
  nlohmann::json j{{"conclusive", r.conclusive},
                   {"passed", r.passed},
                   {"failures", r.failures},
                   {"embeddings", r.embeddings},
                   {"circular_orders", r.circular_orders}};
  if (r.pair_extent) j["pair_extent"] = point_to_json(*r.pair_extent);
  return j;
}

// ---------------------------------------------------------------------------
// verification

namespace {

/// Gadget with stub edges on active interconnectors and, when the kind
/// reserves slots, slot leaves on the others.
struct Variant {
  Graph graph;
  OrientationMap orientation;
  std::vector<VertexId> stub;  // per interconnector, -1 when inactive
  int gadget_vertices = 0;
  std::string name;
};

Variant make_variant(const Gadget& g, std::uint32_t active) {
  Variant v;
  v.graph = Graph(g.graph.vertex_count());
  for (const auto& e : g.graph.edges()) v.graph.add_edge(e.u, e.v);
  v.gadget_vertices = g.graph.vertex_count();
  const OrientationMap base = g.drawing_orientation();
  std::vector<Orient> labels = base.labels;
  v.name = "active={";
  v.stub.assign(g.interconnectors.size(), -1);
  // Slot leaves first so gadget-side vertices keep the lowest ids.
  for (std::size_t i = 0; i < g.interconnectors.size(); ++i) {
    const auto& ic = g.interconnectors[i];
    if ((active >> i) & 1) continue;
    if (auto it = g.reserved_slot.find(ic.label); it != g.reserved_slot.end()) {
      const VertexId s = v.graph.add_vertex();
      v.graph.add_edge(ic.id, s);
      labels.push_back(axis_of(it->second - g.drawing.points[ic.id]));
      ++v.gadget_vertices;
    }
  }
  for (std::size_t i = 0; i < g.interconnectors.size(); ++i) {
    const auto& ic = g.interconnectors[i];
    if (!((active >> i) & 1)) continue;
    const VertexId s = v.graph.add_vertex();
    v.graph.add_edge(ic.id, s);
    labels.push_back(ic.axis);
    v.stub[i] = s;
    v.name += ic.label;
    // A windmill partner is itself a degree-4 interconnector; a bare leaf
    // would let the arm bend.
    if (g.kind == GadgetKind::Windmill)
      for (int k = 0; k < 3; ++k) {
        v.graph.add_edge(s, v.graph.add_vertex());
        labels.push_back(Orient::Undefined);
      }
  }
  v.name += "}";
  v.orientation = OrientationMap(v.graph);
  v.orientation.labels = labels;
  return v;
}

Point extent_of(const Embedding& e, int count) {
  Point lo = e.points[0], hi = e.points[0];
  for (int i = 1; i < count; ++i)
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], e.points[i][a]);
      hi[a] = std::max(hi[a], e.points[i][a]);
    }
  return {hi.x - lo.x + 1, hi.y - lo.y + 1, 1};
}

bool fits(const Point& extent, const Point& box, bool rotations) {
  if (extent.x <= box.x && extent.y <= box.y) return true;
  return rotations && extent.x <= box.y && extent.y <= box.x;
}

/// Interconnector positions agree with the drawing up to an allowed lattice
/// symmetry.
bool rigid_positions(const Gadget& g, const Embedding& e, bool reflections_only) {
  const auto& ics = g.interconnectors;
  const Point a0 = e.points[ics[0].id], d0 = g.drawing.points[ics[0].id];
  for (const LatticeSymmetry& s : lattice_symmetries(2)) {
    if (reflections_only && s.axis[0] != 0) continue;
    bool ok = true;
    for (std::size_t i = 1; i < ics.size() && ok; ++i)
      ok = e.points[ics[i].id] - a0 == s.apply(g.drawing.points[ics[i].id] - d0);
    if (ok) return true;
  }
  return false;
}

/// Labels in counter-clockwise order around the interconnectors' mean,
/// normalized under rotation and reversal.
std::string circular_order(const Gadget& g, const Embedding& e) {
  const auto& ics = g.interconnectors;
  double cx = 0, cy = 0;
  for (const auto& ic : ics) {
    cx += e.points[ic.id].x;
    cy += e.points[ic.id].y;
  }
  cx /= ics.size();
  cy /= ics.size();
  std::vector<std::pair<double, std::string>> by_angle;
  for (const auto& ic : ics)
    by_angle.emplace_back(std::atan2(e.points[ic.id].y - cy, e.points[ic.id].x - cx), ic.label);
  std::sort(by_angle.begin(), by_angle.end());
  std::string s;
  for (const auto& [a, l] : by_angle) s += l;
  std::string best = s;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < s.size(); ++r) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      best = std::min(best, s);
    }
    std::reverse(s.begin(), s.end());
  }
  return best;
}

std::set<std::string> all_circular_orders(std::size_t k) {
  std::string labels = "xyzw";
  labels.resize(k);
  std::set<std::string> out;
  std::sort(labels.begin(), labels.end());
  do {
    std::string s = labels, best = labels;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t r = 0; r < s.size(); ++r) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        best = std::min(best, s);
      }
      std::reverse(s.begin(), s.end());
    }
    out.insert(best);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

void fail(GadgetReport& r, std::string msg) {
  r.passed = false;
  if (r.failures.size() < 20) r.failures.push_back(std::move(msg));
}

}  // namespace

GadgetReport verify_gadget(const Gadget& g, std::uint64_t node_budget) {
  GadgetReport r;
  const std::size_t k = g.interconnectors.size();
  if (k == 0) {
    fail(r, "no interconnectors");
    return r;
  }
  const bool windmill = g.kind == GadgetKind::Windmill;
  const bool unique = g.kind == GadgetKind::DoubleLadder || g.kind == GadgetKind::Square;
  std::set<std::string> orders;

  if (g.kind == GadgetKind::Square) {
    // Corners are identified, never linked: check the bare cycle.
    if (!degree_set(g.graph).subset_of(g.degree_set)) fail(r, "degree set");
    const auto en = enumerate_embeddings(g.graph, 2, 2);
    r.embeddings = en.drawings.size();
    if (en.drawings.size() != 1) fail(r, "expected a unique embedding");
    for (const auto& d : en.drawings)
      if (!fits(d.size(), g.footprint, true)) fail(r, "footprint");
    r.circular_orders = {circular_order(g, g.drawing)};
    return r;
  }

  for (std::uint32_t active = 0; active < (1u << k); ++active) {
    // The windmill is rigid only along used arms; every arm is checked in
    // the all-active variant, the others only for degrees.
    const bool full = active + 1 == (1u << k);
    Variant v = make_variant(g, active);
    DegreeSet seen_degrees;
    for (int u = 0; u < v.gadget_vertices; ++u) seen_degrees.insert(v.graph.degree(u));
    if (!seen_degrees.subset_of(g.degree_set))
      fail(r, v.name + ": degree set " + seen_degrees.to_string());
    if (windmill && !full) continue;

    SolveConstraints c;
    c.node_budget = node_budget;
    c.prefilter = false;
    if (g.oriented) c.orientation = v.orientation;

    if (unique) {
      const auto en = enumerate_embeddings(v.graph, 2, 2, c);
      if (en.budget_exceeded) r.conclusive = false;
      if (en.drawings.size() != 1) fail(r, v.name + ": embedding not unique");
    }

    std::uint64_t seen = 0;
    const VisitStatus st = for_each_embedding(v.graph, 2, c, [&](const Embedding& e) {
      ++seen;
      const Point ext = extent_of(e, v.gadget_vertices);
      if (!fits(ext, g.footprint, !g.oriented))
        fail(r, v.name + ": extent " + std::to_string(ext.x) + "x" + std::to_string(ext.y));
      auto [lo, hi] = std::pair{e.points[0], e.points[0]};
      for (int i = 0; i < v.gadget_vertices; ++i)
        for (int a = 0; a < 2; ++a) {
          lo[a] = std::min(lo[a], e.points[i][a]);
          hi[a] = std::max(hi[a], e.points[i][a]);
        }
      for (std::size_t i = 0; i < k; ++i) {
        if (v.stub[i] < 0) continue;
        const Point s = e.points[v.stub[i]];
        const bool outside = s.x < lo.x || s.x > hi.x || s.y < lo.y || s.y > hi.y;
        if (!outside) fail(r, v.name + ": " + g.interconnectors[i].label + " not exposed");
      }
      if (windmill) {
        const Point center = e.points[0];
        std::multiset<Point> got, want;
        for (const auto& ic : g.interconnectors) {
          Point d = e.points[ic.id] - center, w = g.drawing.points[ic.id] - g.drawing.points[0];
          got.insert({std::abs(d.x) + std::abs(d.y), std::min(std::abs(d.x), std::abs(d.y)), 0});
          want.insert({std::abs(w.x) + std::abs(w.y), std::min(std::abs(w.x), std::abs(w.y)), 0});
        }
        if (got != want) fail(r, v.name + ": arm geometry");
      } else if (!rigid_positions(g, e, g.oriented)) {
        fail(r, v.name + ": interconnector positions move");
      }
      orders.insert(circular_order(g, e));
      return r.failures.size() < 20;
    });
    if (st == VisitStatus::BudgetExceeded) r.conclusive = false;
    if (seen == 0) fail(r, v.name + ": no embedding");
    r.embeddings += seen;
  }

  r.circular_orders.assign(orders.begin(), orders.end());
  if (windmill) {
    if (orders != all_circular_orders(k)) fail(r, "not every circular order is realizable");
  } else if (orders.size() > 1) {
    fail(r, "circular order is not fixed");
  }

  if (g.pair_footprint) {
    // Two copies linked x to z, the other interconnectors unused.
    Variant a = make_variant(g, 0);
    Graph pair = disjoint_union(a.graph, a.graph);
    const int n = a.graph.vertex_count();
    OrientationMap f(pair);
    for (EdgeId e = 0; e < a.graph.edge_count(); ++e) {
      f[e] = a.orientation[e];
      f[e + a.graph.edge_count()] = a.orientation[e];
    }
    pair.add_edge(g.interconnector("x").id, n + g.interconnector("z").id);
    f.labels.push_back(Orient::Horizontal);
    SolveConstraints c;
    c.node_budget = node_budget;
    c.prefilter = false;
    if (g.oriented) c.orientation = f;
    bool any = false;
    const VisitStatus st = for_each_embedding(pair, 2, c, [&](const Embedding& e) {
      const Point ext = extent_of(e, pair.vertex_count());
      if (!any) r.pair_extent = ext;
      any = true;
      const Point& want = *g.pair_footprint;
      if (!(ext.x == want.x && ext.y == want.y) && !(!g.oriented && ext.x == want.y && ext.y == want.x))
        fail(r, "pair extent " + std::to_string(ext.x) + "x" + std::to_string(ext.y));
      return r.failures.size() < 20;
    });
    if (st == VisitStatus::BudgetExceeded) r.conclusive = false;
    if (!any) fail(r, "linked pair does not embed");
  }
  if (!r.conclusive) r.passed = false;
  return r;
}

}  // namespace pgr
