#include <array>
#include <algorithm>
#include <numeric>
#include <random>

#include "pgr/gadgets.hpp"
#include "pgr/skeleton.hpp"

namespace pgr {

namespace {

Orient swap_axis(Orient o) {
  if (o == Orient::Horizontal) return Orient::Vertical;
  if (o == Orient::Vertical) return Orient::Horizontal;
  return o;
}

void require_complete(const Graph& g, const OrientationMap& f) {
  if (static_cast<int>(f.labels.size()) != g.edge_count())
    throw Error("orientation has " + std::to_string(f.labels.size()) + " labels for " +
                std::to_string(g.edge_count()) + " edges");
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (f[e] == Orient::Undefined)
      throw Error("orientation undefined on edge " + std::to_string(g.edge(e).u) + "-" +
                  std::to_string(g.edge(e).v));
}

/// Interconnector label per incident edge of v, and whether the copy turns.
struct Choice {
  std::map<EdgeId, std::string> label;
  bool rotated = false;
};

/// Same-axis edges take an opposed pair in edge order, so collinear edges
/// meet opposed interconnectors and orthogonal ones consecutive
/// interconnectors.
Choice choose_by_axis(const Graph& g, const OrientationMap& f, VertexId v, const Gadget& gad) {
  std::vector<EdgeId> h, vert;
  for (EdgeId e : g.incident_edges(v)) (f[e] == Orient::Horizontal ? h : vert).push_back(e);
  std::sort(h.begin(), h.end());
  std::sort(vert.begin(), vert.end());
  auto has = [&](const char* l) {
    return std::any_of(gad.interconnectors.begin(), gad.interconnectors.end(),
                       [&](const Interconnector& c) { return c.label == l; });
  };
  std::vector<std::string> hp, vp;
  for (const char* l : {"x", "z"})
    if (has(l)) hp.push_back(l);
  for (const char* l : {"y", "w"})
    if (has(l)) vp.push_back(l);
  Choice c;
  if (vert.size() > vp.size() && h.size() <= vp.size() && vert.size() <= hp.size()) {
    c.rotated = true;
    std::swap(hp, vp);
  }
  // The smaller endpoint of an edge prefers the first label of the pair, so
  // a lone edge joins x to z (y to w).
  auto deal = [&](const std::vector<EdgeId>& es, const std::vector<std::string>& pool, const char* axis) {
    if (es.size() > pool.size())
      throw Error("vertex " + std::to_string(v) + " has " + std::to_string(es.size()) + " " + axis +
                  " edges; the " + to_string(gad.kind) + " gadget offers " +
                  std::to_string(pool.size()));
    std::vector<char> taken(pool.size(), 0);
    for (EdgeId e : es) {
      std::size_t want = g.edge(e).u == v || pool.size() == 1 ? 0 : 1;
      if (taken[want]) want = 1 - want;
      taken[want] = 1;
      c.label[e] = pool[want];
    }
  };
  deal(h, hp, "horizontal");
  deal(vert, vp, "vertical");
  return c;
}

VertexId gadget_id(const Gadget& gad, const std::string& label) { return gad.interconnector(label).id; }

/// Copies the gadget per vertex and links the chosen interconnectors.
Substitution linked(const Graph& g, const Gadget& gad, const std::vector<Choice>& choice) {
  Substitution s;
  SubstitutionMap& m = s.map;
  m.kind = gad.kind;
  const int k = gad.graph.vertex_count();
  s.graph = Graph(g.vertex_count() * k);
  m.copy.resize(g.vertex_count());
  m.rotated.assign(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    m.rotated[v] = choice[v].rotated;
    m.copy[v].resize(k);
    std::iota(m.copy[v].begin(), m.copy[v].end(), v * k);
    for (EdgeId ge = 0; ge < gad.graph.edge_count(); ++ge) {
      const Edge& e = gad.graph.edge(ge);
      s.graph.add_edge(m.copy[v][e.u], m.copy[v][e.v]);
      m.edge_origin.push_back({v, ge});
    }
  }
  m.edge_link.resize(g.edge_count());
  m.active.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const std::string& lu = choice[ed.u].label.at(e);
    const std::string& lv = choice[ed.v].label.at(e);
    const VertexId a = m.copy[ed.u][gadget_id(gad, lu)], b = m.copy[ed.v][gadget_id(gad, lv)];
    s.graph.add_edge(a, b);
    m.edge_origin.push_back({-1, e});
    m.edge_link[e] = {a, b};
    m.active[e] = {lu, lv};
  }
  // Unused interconnectors with a reserved slot get their pendant leaf.
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (std::size_t i = 0; i < gad.interconnectors.size(); ++i) {
      const auto& ic = gad.interconnectors[i];
      if (!gad.reserved_slot.count(ic.label)) continue;
      bool used = false;
      for (const auto& [e, l] : choice[v].label) used |= l == ic.label;
      if (used) continue;
      const VertexId leaf = s.graph.add_vertex();
      s.graph.add_edge(m.copy[v][ic.id], leaf);
      m.edge_origin.push_back({v, -1 - static_cast<int>(i)});
    }
  return s;
}

Substitution oriented_substitution(const Graph& g, const OrientationMap& f, GadgetKind kind) {
  require_complete(g, f);
  const Gadget& gad = catalog(kind);
  std::vector<Choice> choice(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > static_cast<int>(gad.interconnectors.size()))
      throw Error("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                  "; the " + to_string(kind) + " gadget has " +
                  std::to_string(gad.interconnectors.size()) + " interconnectors");
    choice[v] = choose_by_axis(g, f, v, gad);
  }
  Substitution s = linked(g, gad, choice);
  s.orientation = compose_orientation(gad.drawing_orientation(), f, s.map);
  // compose_orientation cannot see slot leaves' axes from the drawing alone.
  for (EdgeId e = 0; e < s.graph.edge_count(); ++e) {
    const auto [v, ge] = s.map.edge_origin[e];
    if (v < 0 || ge >= 0) continue;
    const auto& ic = gad.interconnectors[-1 - ge];
    const Point d = gad.reserved_slot.at(ic.label) - gad.drawing.points[ic.id];
    const Orient o = d.x != 0 ? Orient::Horizontal : Orient::Vertical;
    s.orientation[e] = s.map.rotated[v] ? swap_axis(o) : o;
  }
  return s;
}

}  // namespace

nlohmann::json to_json(const SubstitutionMap& m) {
  nlohmann::json j;
  j["kind"] = to_string(m.kind);
  j["copy"] = m.copy;
  if (!m.edge_copy.empty()) j["edge_copy"] = m.edge_copy;
  j["edge_link"] = nlohmann::json::array();
  for (auto [a, b] : m.edge_link) j["edge_link"].push_back({a, b});
  j["active"] = nlohmann::json::array();
  for (const auto& [a, b] : m.active) j["active"].push_back({a, b});
  std::vector<int> rot(m.rotated.begin(), m.rotated.end());
  j["rotated"] = rot;
  return j;
}

OrientationMap compose_orientation(const OrientationMap& gadget_f, const OrientationMap& f_g,
                                   const SubstitutionMap& m) {
  OrientationMap out;
  out.labels.resize(m.edge_origin.size(), Orient::Undefined);
  for (std::size_t e = 0; e < m.edge_origin.size(); ++e) {
    const auto [v, x] = m.edge_origin[e];
    if (v >= 0) {
      if (x < 0) continue;  // slot leaf; its axis comes from the catalog slot
      const Orient o = gadget_f[x];
      out.labels[e] = m.rotated.at(v) ? swap_axis(o) : o;
    } else if (v == -1) {
      out.labels[e] = f_g[x];
    } else {
      throw Error("edge " + std::to_string(e) + " is neither internal nor external");
    }
  }
  return out;
}

OrientationMap compose_orientation_utree(const OrientationMap& f_u, const OrientationMap& f_s,
                                         const SubstitutionMap& m) {
  return compose_orientation(f_u, f_s, m);
}

Substitution double_ladder_substitution(const Graph& g, const OrientationMap& f) {
  return oriented_substitution(g, f, GadgetKind::DoubleLadder);
}

Substitution utree_substitution(const Graph& g, const OrientationMap& f) {
  return oriented_substitution(g, f, GadgetKind::UTree);
}

Substitution three_plug_substitution(const Graph& g, const OrientationMap& f) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3)
      throw Error("three-plug substitution needs maximum degree 3; vertex " + std::to_string(v) +
                  " has degree " + std::to_string(g.degree(v)));
  return oriented_substitution(g, f, GadgetKind::ThreePlug);
}

Substitution windmill_substitution(const Graph& g, std::optional<std::uint32_t> seed) {
  const Gadget& gad = catalog(GadgetKind::Windmill);
  std::mt19937 rng(seed.value_or(0));
  std::vector<Choice> choice(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > static_cast<int>(gad.interconnectors.size()))
      throw Error("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                  "; the windmill has 4 arms");
    std::vector<std::string> pool;
    for (const auto& ic : gad.interconnectors) pool.push_back(ic.label);
    if (seed) std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<EdgeId> es = g.incident_edges(v);
    std::sort(es.begin(), es.end());
    for (std::size_t i = 0; i < es.size(); ++i) choice[v].label[es[i]] = pool[i];
  }
  return linked(g, gad, choice);
}

// ---------------------------------------------------------------------------
// square

Substitution square_substitution(const Graph& g, const OrientationMap& f) {
  require_complete(g, f);
  const Gadget& gad = catalog(GadgetKind::Square);
  std::vector<Choice> choice(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 4)
      throw Error("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    choice[v] = choose_by_axis(g, f, v, gad);
  }
  Substitution s;
  SubstitutionMap& m = s.map;
  m.kind = GadgetKind::Square;
  s.graph = Graph(4 * g.vertex_count());
  m.copy.resize(g.vertex_count());
  m.rotated.assign(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    m.copy[v] = {4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3};
    for (EdgeId ge = 0; ge < gad.graph.edge_count(); ++ge) {
      s.graph.add_edge(m.copy[v][gad.graph.edge(ge).u], m.copy[v][gad.graph.edge(ge).v]);
      m.edge_origin.push_back({v, ge});
    }
  }
  m.edge_copy.resize(g.edge_count());
  m.edge_link.resize(g.edge_count());
  m.active.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const std::string& lu = choice[ed.u].label.at(e);
    const std::string& lv = choice[ed.v].label.at(e);
    const VertexId cu = m.copy[ed.u][gadget_id(gad, lu)], cv = m.copy[ed.v][gadget_id(gad, lv)];
    const VertexId c1 = s.graph.add_vertex(), c3 = s.graph.add_vertex();
    for (auto [a, b] : {std::pair{cu, c1}, {c1, cv}, {cv, c3}, {c3, cu}}) {
      s.graph.add_edge(a, b);
      m.edge_origin.push_back({-2, e});
    }
    m.edge_copy[e] = {cu, c1, cv, c3};
    m.edge_link[e] = {cu, cv};
    m.active[e] = {lu, lv};
  }
  return s;
}

Point square_h(int i, int j) { return {2 * i + 2 * j, -2 * i + 2 * j, 0}; }

std::pair<int, int> square_h_inverse(const Point& p) {
  if ((p.x - p.y) % 4 != 0 || (p.x + p.y) % 4 != 0)
    throw Error("point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") is not an image of h");
  return {(p.x - p.y) / 4, (p.x + p.y) / 4};
}

Embedding square_transport(const Graph& g, const OrientationMap& f, const Embedding& e,
                           const Substitution& q) {
  if (e.dim != 2) throw Error("square transport needs a 2D embedding");
  if (!validate_embedding(g, e) || !respects_orientation(g, e, f))
    throw Error("square transport needs a valid embedding that respects the orientation");
  const Gadget& gad = catalog(GadgetKind::Square);
  const SubstitutionMap& m = q.map;
  Embedding out{2, std::vector<Point>(q.graph.vertex_count())};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Point tl = square_h(e.points[v].x, e.points[v].y);
    const Point TL = tl, TR = tl + Point{1, 0, 0}, BR = tl + Point{1, -1, 0}, BL = tl + Point{0, -1, 0};
    // Default placement, then flip each opposed pair toward its used edges.
    std::map<std::string, Point> at{{"x", TL}, {"y", TR}, {"z", BR}, {"w", BL}};
    for (std::size_t k = 0; k < g.neighbors(v).size(); ++k) {
      const EdgeId eid = g.incident_edges(v)[k];
      const Point d = e.points[g.neighbors(v)[k]] - e.points[v];
      const auto& [lu, lv] = m.active[eid];
      const std::string& mine = g.edge(eid).u == v ? lu : lv;
      const Point want = d.x == 1 ? BR : d.x == -1 ? TL : d.y == 1 ? TR : BL;
      if (at[mine] != want) {
        const std::string other = mine == "x" ? "z" : mine == "z" ? "x" : mine == "y" ? "w" : "y";
        std::swap(at[mine], at[other]);
      }
    }
    for (const auto& ic : gad.interconnectors) out.points[m.copy[v][ic.id]] = at[ic.label];
  }
  for (EdgeId eid = 0; eid < g.edge_count(); ++eid) {
    const auto& sq = m.edge_copy[eid];
    const Point a = out.points[sq[0]], b = out.points[sq[2]];
    out.points[sq[1]] = {a.x, b.y, 0};
    out.points[sq[3]] = {b.x, a.y, 0};
  }
  return out;
}

// ---------------------------------------------------------------------------

Graph strictify(const Graph& t, const SubstitutionMap& m) {
  if (m.kind != GadgetKind::ThreePlug || m.copy.empty())
    throw Error("strictify needs the map of a three-plug substitution");
  const Gadget& gad = catalog(GadgetKind::ThreePlug);
  if (!gad.strict_leaf) throw Error("the three-plug catalog entry records no eligible leaf");
  Graph out = t;
  out.add_edge(m.copy[0][*gad.strict_leaf], out.add_vertex());
  return out;
}

Graph prism(const Graph& g) {
  const int n = g.vertex_count();
  Graph p(2 * n);
  for (int layer = 0; layer < 2; ++layer)
    for (const auto& e : g.edges()) p.add_edge(e.u + layer * n, e.v + layer * n);
  for (VertexId v = 0; v < n; ++v) p.add_edge(v, v + n);
  return p;
}

Graph hairy_prism(const Graph& g, const DegreeSet& d2) {
  if (!g.empty() && !d2.subset_of(degree_set(g)))
    throw Error("hairy prism: " + d2.to_string() + " is not a subset of the degree set " +
                degree_set(g).to_string());
  Graph p = prism(g);
  const int n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v)
    if (d2.contains(g.degree(v)))
      for (int layer = 0; layer < 2; ++layer) p.add_edge(v + layer * n, p.add_vertex());
  return p;
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::array<std::pair<ReduceTarget, const char*>, 6> kTargets = {{
    {ReduceTarget::Tree124, "124-tree"},
    {ReduceTarget::Tree123, "123-tree"},
    {ReduceTarget::Tree13, "13-tree"},
    {ReduceTarget::StrictBinary, "strict-binary"},
    {ReduceTarget::Graph23, "23-graph"},
    {ReduceTarget::Graph24, "24-graph"},
}};
}  // namespace

ReduceTarget reduce_target_from_string(const std::string& s) {
  for (const auto& [t, name] : kTargets)
    if (s == name) return t;
  throw Error("unknown reduction target '" + s +
              "' (expected 124-tree, 123-tree, 13-tree, strict-binary, 23-graph or 24-graph)");
}

std::string to_string(ReduceTarget t) {
  for (const auto& [k, name] : kTargets)
    if (k == t) return name;
  return "?";
}

Reduction reduce(const NaeFormula& phi, ReduceTarget target) {
  const ExtendedSkeleton s = build_extended_skeleton(phi);
  const OrientationMap f = consistent_orientation(s);
  switch (target) {
    case ReduceTarget::Tree124:
      return {s.graph, f};
    case ReduceTarget::Graph23: {
      Substitution l = double_ladder_substitution(s.graph, f);
      return {std::move(l.graph), std::move(l.orientation)};
    }
    case ReduceTarget::Graph24: {
      Substitution q = square_substitution(s.graph, f);
      return {std::move(q.graph), std::move(q.orientation)};
    }
    default:
      break;
  }
  Substitution u = utree_substitution(s.graph, f);
  if (target == ReduceTarget::Tree123) return {std::move(u.graph), std::move(u.orientation)};
  Substitution t = three_plug_substitution(u.graph, u.orientation);
  if (target == ReduceTarget::Tree13) return {std::move(t.graph), std::move(t.orientation)};
  const Gadget& tp = catalog(GadgetKind::ThreePlug);
  Reduction r{strictify(t.graph, t.map), std::move(t.orientation)};
  const Point d = *tp.strict_slot - tp.drawing.points[*tp.strict_leaf];
  const Orient o = d.x != 0 ? Orient::Horizontal : Orient::Vertical;
  r.orientation.labels.push_back(t.map.rotated[0] ? swap_axis(o) : o);
  return r;
}

}  // namespace pgr
