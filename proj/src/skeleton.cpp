#include "pgr/skeleton.hpp"

#include <algorithm>
#include <set>

#include "pgr/io.hpp"

namespace pgr {

namespace {

bool occurs(const Clause& c, Literal lit) {
  return std::find(c.begin(), c.end(), lit) != c.end();
}

class Builder {
 public:
  explicit Builder(const NaeFormula& phi) : phi_(phi) {}

  ExtendedSkeleton build() {
    const int n = phi_.variable_count;
    const int length = 4 * n + 5;
    s_.provenance.formula = phi_;
    for (int k = 0; k < length; ++k) {
      s_.main_cord.push_back(g().add_vertex());
      if (k > 0) g().add_edge(s_.main_cord[k - 1], s_.main_cord[k]);
    }
    for (int k = 0; k < length; ++k) {
      const VertexId a = s_.main_cord[k];
      if (k == 0 || k == length - 1) {
        leaf(a);
        leaf(a);
        leaf(a);
      } else if (k == 1 || k == length - 2) {
        branch(a, 0);
        branch(a, 0);
      } else if (k % 4 == 0) {
        VariableSite site;
        site.variable = k / 4;
        site.anchor = a;
        site.positive_cord = static_cast<int>(s_.transversal_cords.size());
        site.positive_connector = branch(a, site.variable);
        site.negative_cord = static_cast<int>(s_.transversal_cords.size());
        site.negative_connector = branch(a, -site.variable);
        s_.provenance.variables.push_back(site);
      } else {
        leaf(a);
        leaf(a);
      }
    }
    return std::move(s_);
  }

 private:
  Graph& g() { return s_.graph; }

  VertexId leaf(VertexId a) {
    const VertexId v = g().add_vertex();
    g().add_edge(a, v);
    return v;
  }

  /// Connector plus a cord of one vertex per clause and two end vertices.
  VertexId branch(VertexId anchor, Literal lit) {
    const VertexId connector = leaf(anchor);
    const int rows = static_cast<int>(phi_.clauses.size());
    std::vector<VertexId> cord;
    VertexId prev = connector;
    for (int k = 0; k < rows + 2; ++k) {
      const VertexId t = leaf(prev);
      cord.push_back(t);
      prev = t;
    }
    for (int k = 0; k < rows + 2; ++k) {
      const VertexId t = cord[k];
      const int clause = k - 1;
      if (lit != 0 && clause >= 0 && clause < rows && !occurs(phi_.clauses[clause], lit)) {
        const VertexId elbow = leaf(t);
        const VertexId tip = g().add_vertex();
        const EdgeId e = g().add_edge(elbow, tip);
        s_.flags.push_back(e);
        s_.provenance.flags.push_back({e, clause, lit});
        leaf(t);
      } else {
        leaf(t);
        leaf(t);
        if (k == rows + 1) leaf(t);
      }
    }
    s_.transversal_cords.push_back(std::move(cord));
    s_.provenance.cord_literal.push_back(lit);
    return connector;
  }

  const NaeFormula& phi_;
  ExtendedSkeleton s_;
};

/// Flags, skeleton degrees and degree-4 paths read off the bare graph.
struct Parts {
  std::vector<char> is_flag;                // per edge
  std::vector<int> dz;                      // degree in the skeleton
  std::vector<std::vector<VertexId>> paths;  // maximal degree-4 paths
  std::vector<int> main_candidates;          // indices into paths
  std::vector<std::string> problems;
};

Parts analyze(const Graph& g) {
  Parts p;
  const int n = g.vertex_count();
  p.is_flag.assign(g.edge_count(), 0);
  p.dz.assign(n, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const int du = g.degree(u), dv = g.degree(v);
    p.is_flag[e] = (du == 1 && dv == 2) || (du == 2 && dv == 1);
    if (!p.is_flag[e]) {
      ++p.dz[u];
      ++p.dz[v];
    }
  }
  std::vector<char> seen(n, 0);
  auto four_neighbors = [&](VertexId v) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < g.neighbors(v).size(); ++i) {
      const VertexId w = g.neighbors(v)[i];
      if (!p.is_flag[g.incident_edges(v)[i]] && p.dz[w] == 4) out.push_back(w);
    }
    return out;
  };
  for (VertexId s = 0; s < n; ++s) {
    if (p.dz[s] != 4 || seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId w : four_neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    VertexId end = -1;
    bool path = true;
    for (VertexId v : comp) {
      const auto nb = four_neighbors(v);
      if (nb.size() > 2) path = false;
      if (nb.size() <= 1 && (end < 0 || v < end)) end = v;
    }
    if (!path || end < 0) {
      p.problems.push_back("degree-4 vertices around " + std::to_string(s) + " do not form a path");
      continue;
    }
    std::vector<VertexId> walk{end};
    VertexId prev = -1;
    while (walk.size() < comp.size()) {
      for (VertexId w : four_neighbors(walk.back()))
        if (w != prev) {
          prev = walk.back();
          walk.push_back(w);
          break;
        }
    }
    p.paths.push_back(std::move(walk));
  }
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    bool main = false;
    for (VertexId v : p.paths[i]) {
      int twos = 0;
      for (std::size_t k = 0; k < g.neighbors(v).size(); ++k)
        if (!p.is_flag[g.incident_edges(v)[k]] && p.dz[g.neighbors(v)[k]] == 2) ++twos;
      if (twos >= 2) main = true;
    }
    if (main) p.main_candidates.push_back(static_cast<int>(i));
  }
  return p;
}

std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ExtendedSkeleton build_extended_skeleton(const NaeFormula& phi) {
  phi.validate();
  if (phi.variable_count < 1) throw Error("formula needs at least one variable");
  return Builder(phi).build();
}

std::string to_string(OrientRule r) {
  switch (r) {
    case OrientRule::MainCord: return "main-cord";
    case OrientRule::TransversalCord: return "transversal-cord";
    case OrientRule::Connector: return "connector";
    case OrientRule::FourHorizontal: return "degree-4-horizontal";
    case OrientRule::FourVertical: return "degree-4-vertical";
    case OrientRule::Flag: return "flag";
  }
  return "?";
}

OrientationMap consistent_orientation(const ExtendedSkeleton& s, std::vector<OrientRule>* rules) {
  const Graph& g = s.graph;
  OrientationMap f(g);
  for (auto& l : f.labels) l = Orient::Undefined;
  std::vector<OrientRule> why(g.edge_count(), OrientRule::Flag);

  const Parts parts = analyze(g);
  if (!parts.problems.empty()) throw Error(parts.problems.front());
  if (parts.main_candidates.size() != 1)
    throw Error("expected exactly one main cord, found " +
                std::to_string(parts.main_candidates.size()));
  const auto& main = parts.paths[parts.main_candidates[0]];

  auto set = [&](VertexId u, VertexId v, Orient o, OrientRule r) {
    const EdgeId e = *g.edge_id(u, v);
    f[e] = o;
    why[e] = r;
  };
  for (std::size_t i = 0; i + 1 < main.size(); ++i)
    set(main[i], main[i + 1], Orient::Horizontal, OrientRule::MainCord);
  for (std::size_t t = 0; t < parts.paths.size(); ++t) {
    if (static_cast<int>(t) == parts.main_candidates[0]) continue;
    const auto& cord = parts.paths[t];
    for (std::size_t i = 0; i + 1 < cord.size(); ++i)
      set(cord[i], cord[i + 1], Orient::Vertical, OrientRule::TransversalCord);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (parts.is_flag[e]) continue;
    const auto [u, v] = g.edge(e);
    if (parts.dz[u] == 2 || parts.dz[v] == 2) set(u, v, Orient::Vertical, OrientRule::Connector);
  }
  auto horizontal_count = [&](VertexId u) {
    int h = 0;
    for (EdgeId e : g.incident_edges(u)) h += f[e] == Orient::Horizontal;
    return h;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (parts.is_flag[e] || f[e] != Orient::Undefined) continue;
    const auto [a, b] = g.edge(e);
    VertexId u = -1;
    if (parts.dz[a] == 4) u = a;
    else if (parts.dz[b] == 4) u = b;
    if (u < 0) continue;
    if (horizontal_count(u) >= 2) {
      f[e] = Orient::Vertical;
      why[e] = OrientRule::FourVertical;
    } else {
      f[e] = Orient::Horizontal;
      why[e] = OrientRule::FourHorizontal;
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (parts.is_flag[e]) {
      f[e] = Orient::Horizontal;
      why[e] = OrientRule::Flag;
    }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (f[e] == Orient::Undefined)
      throw Error("edge " + std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v) +
                  " left without orientation");
  if (rules) *rules = std::move(why);
  return f;
}

std::vector<std::string> validate_skeleton_structure(const ExtendedSkeleton& s) {
  std::vector<std::string> out;
  const Graph& g = s.graph;
  if (g.empty()) return {"empty graph"};
  if (!is_tree(g)) out.push_back("not a tree");
  if (!degree_set(g).subset_of(DegreeSet{1, 2, 4}))
    out.push_back("degrees " + degree_set(g).to_string() + " not within {1,2,4}");
  const Parts parts = analyze(g);
  out.insert(out.end(), parts.problems.begin(), parts.problems.end());

  std::vector<EdgeId> flags;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (parts.is_flag[e]) flags.push_back(e);
  std::vector<EdgeId> declared = s.flags;
  std::sort(declared.begin(), declared.end());
  if (flags != declared) out.push_back("declared flags differ from degree-1/degree-2 edges");

  if (parts.main_candidates.size() != 1) {
    out.push_back("expected exactly one main cord, found " +
                  std::to_string(parts.main_candidates.size()));
    return out;
  }
  const auto& main = parts.paths[parts.main_candidates[0]];
  if (sorted(main) != sorted(s.main_cord)) out.push_back("declared main cord differs");
  std::set<std::vector<VertexId>> found, declared_cords;
  for (std::size_t t = 0; t < parts.paths.size(); ++t)
    if (static_cast<int>(t) != parts.main_candidates[0]) found.insert(sorted(parts.paths[t]));
  for (const auto& c : s.transversal_cords) declared_cords.insert(sorted(c));
  if (found != declared_cords) out.push_back("declared transversal cords differ");
  return out;
}

Assignment decode_assignment(const ExtendedSkeleton& s, const Embedding& e) {
  if (e.dim != 2) throw Error("skeleton embeddings are 2D");
  if (!validate_embedding(s.graph, e)) throw Error("invalid embedding");
  Assignment a;
  a.values.assign(s.provenance.formula.variable_count, false);
  for (const auto& site : s.provenance.variables) {
    const auto it = std::find(s.main_cord.begin(), s.main_cord.end(), site.anchor);
    if (it == s.main_cord.end() || it + 1 == s.main_cord.end())
      throw Error("variable anchor is not an inner main cord vertex");
    const Point dir = e.points[*(it + 1)] - e.points[*(it - 1)];
    const Point up = e.points[site.positive_connector] - e.points[site.anchor];
    const int cross = dir.x * up.y - dir.y * up.x;
    if (cross == 0) throw Error("variable cord is collinear with the main cord");
    a.values[site.variable - 1] = cross > 0;
  }
  return a;
}

nlohmann::json skeleton_sidecar(const ExtendedSkeleton& s) {
  using nlohmann::json;
  json j;
  j["flags"] = json::array();
  for (EdgeId e : s.flags) j["flags"].push_back({s.graph.edge(e).u, s.graph.edge(e).v});
  j["main_cord"] = s.main_cord;
  j["transversal_cords"] = s.transversal_cords;
  json vars = json::array();
  for (const auto& v : s.provenance.variables)
    vars.push_back({{"variable", v.variable},
                    {"anchor", v.anchor},
                    {"positive_connector", v.positive_connector},
                    {"negative_connector", v.negative_connector},
                    {"positive_cord", v.positive_cord},
                    {"negative_cord", v.negative_cord}});
  json flags = json::array();
  for (const auto& fl : s.provenance.flags)
    flags.push_back({{"edge", {s.graph.edge(fl.edge).u, s.graph.edge(fl.edge).v}},
                     {"clause", fl.clause},
                     {"literal", fl.literal}});
  j["provenance"] = {{"formula", serialize_dimacs(s.provenance.formula)},
                     {"variables", vars},
                     {"flags", flags},
                     {"cord_literal", s.provenance.cord_literal}};
  return j;
}

}  // namespace pgr
