// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "gadget_fixtures.hpp"
#include "oracle.hpp"
#include "pgr/dichotomy.hpp"
#include "pgr/gadgets.hpp"
#include "pgr/io.hpp"
#include "pgr/skeleton.hpp"
#include "pgr/solver.hpp"

using namespace pgr;
using namespace pgr::test;

namespace {

constexpr std::uint64_t kBudget = 200'000'000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Verdict free_verdict(const Graph& g, int dim) {
  SolveConstraints c;
  c.node_budget = kBudget;
  return solve(g, dim, c).verdict;
}

Verdict oriented_verdict(const Graph& g, const OrientationMap& f) {
  SolveConstraints c;
  c.orientation = f;
  c.node_budget = kBudget;
  return solve(g, 2, c).verdict;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1 ---------------------------------------------------------------------------
Outcome exhaustive_agreement() {
  int graphs = 0, disagree = 0, bad_witness = 0, budget = 0;
  for (const Graph& g : connected_graphs(7, 4)) {
    ++graphs;
    const RecognitionResult r = recognize(g, 2, kBudget);
    const Verdict s = free_verdict(g, 2);
    if (r.verdict == Verdict::BudgetExceeded || s == Verdict::BudgetExceeded) ++budget;
    if (r.verdict != s) ++disagree;
    if (r.witness && !validate_embedding(g, *r.witness)) ++bad_witness;
  }
  return {disagree == 0 && bad_witness == 0 && budget == 0,
          fmt("%d graphs, %d disagreements, %d invalid witnesses, %d inconclusive", graphs,
              disagree, bad_witness, budget)};
}

// 2 ---------------------------------------------------------------------------
Outcome agreement_14() {
  std::vector<Graph> cases;
  for (int r = 1; r <= 3; ++r)
    for (int c = r; c <= 4; ++c) cases.push_back(grid_14(r, c));
  std::mt19937 rng(14);
  while (cases.size() < 520) cases.push_back(random_14(rng, 1 + static_cast<int>(rng() % 12), rng() % 2));
  int yes = 0, disagree = 0, wrong_set = 0;
  for (const Graph& g : cases) {
    if (!(degree_set(g) == DegreeSet{1, 4})) ++wrong_set;
    const Verdict a = recognize_14(g).verdict;
    const Verdict b = free_verdict(g, 2);
    yes += b == Verdict::Yes;
    if (a != b) ++disagree;
  }
  return {disagree == 0 && wrong_set == 0,
          fmt("%zu instances (%d yes, %zu no), %d disagreements", cases.size(), yes,
              cases.size() - yes, disagree)};
}

// 3 ---------------------------------------------------------------------------
/// Random bipartite graph on a+b vertices with every degree in [lo, hi].
std::optional<Graph> random_bipartite(std::mt19937& rng, int a, int b, int lo, int hi) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph g(a + b);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < a; ++u)
      for (int v = a; v < a + b; ++v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [u, v] : pairs)
      if (g.degree(u) < hi && g.degree(v) < hi && (g.degree(u) < lo || g.degree(v) < lo || rng() % 3 == 0))
        g.add_edge(u, v);
    if (g.min_degree() >= lo && is_connected(g)) return g;
  }
  return std::nullopt;
}

/// Random connected graph on n vertices with every degree in [lo, hi].
std::optional<Graph> random_general(std::mt19937& rng, int n, int lo, int hi) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph g(n);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [u, v] : pairs)
      if (g.degree(u) < hi && g.degree(v) < hi && (g.degree(u) < lo || g.degree(v) < lo || rng() % 3 == 0))
        g.add_edge(u, v);
    if (g.min_degree() >= lo && is_connected(g)) return g;
  }
  return std::nullopt;
}

Outcome refute_34_and_3d() {
  std::vector<Graph> flat, deep;
  // exhaustive up to 8 vertices
  for (const Graph& g : connected_graphs(8, 4))
    if (g.vertex_count() > 1 && degree_set(g).subset_of({3, 4})) flat.push_back(g);
  std::mt19937 rng(34);
  for (int t = 0; t < 300; ++t) {
    const int n = 4 + t % 7;
    const int a = std::max(3, n / 2 - static_cast<int>(rng() % 2)), b = n - a;
    std::optional<Graph> g = b >= 3 ? random_bipartite(rng, a, b, 3, 4) : random_general(rng, n, 3, 4);
    if (g && degree_set(*g).subset_of({3, 4})) flat.push_back(*g);
    if (auto h = random_general(rng, n, 3, 4)) flat.push_back(*h);
  }
  flat.push_back(make_hypercube(3));
  for (int t = 0; t < 300; ++t) {
    const int n = 5 + t % 6;
    const int a = n / 2, b = n - a;
    if (a >= 4)
      if (auto g = random_bipartite(rng, a, b, 4, 6)) deep.push_back(*g);
    if (auto h = random_general(rng, n, 4, 6)) deep.push_back(*h);
  }
  int flat_yes = 0, deep_yes = 0, flat_bip = 0, deep_bip = 0;
  for (const Graph& g : flat) {
    flat_bip += is_bipartite(g);
    flat_yes += free_verdict(g, 2) != Verdict::No;
  }
  for (const Graph& g : deep) {
    deep_bip += is_bipartite(g);
    deep_yes += free_verdict(g, 3) != Verdict::No;
  }
  return {flat_yes == 0 && deep_yes == 0 && !flat.empty() && !deep.empty(),
          fmt("{3,4}: %zu graphs (%d bipartite), %d not refuted; 3D min degree 4: %zu graphs (%d "
              "bipartite), %d not refuted",
              flat.size(), flat_bip, flat_yes, deep.size(), deep_bip, deep_yes)};
}

// 4 ---------------------------------------------------------------------------
Outcome prism_agreement() {
  int graphs = 0, disagree = 0, budget = 0;
  for (const Graph& g : connected_graphs(6, 6)) {
    ++graphs;
    const Verdict a = free_verdict(g, 2), b = free_verdict(prism(g), 3);
    if (a == Verdict::BudgetExceeded || b == Verdict::BudgetExceeded) ++budget;
    if (a != b) ++disagree;
  }
  return {disagree == 0 && budget == 0,
          fmt("%d graphs, %d disagreements, %d inconclusive", graphs, disagree, budget)};
}

// 5 ---------------------------------------------------------------------------
Outcome gadget_verification() {
  std::ostringstream out;
  bool ok = true;
  for (GadgetKind k : {GadgetKind::DoubleLadder, GadgetKind::Square, GadgetKind::ThreePlug,
                       GadgetKind::UTree, GadgetKind::Windmill}) {
    const GadgetReport r = verify_gadget(catalog(k));
    ok = ok && r.conclusive && r.passed;
    out << to_string(k) << (r.conclusive ? (r.passed ? " ok" : " FAILED") : " inconclusive") << "; ";
  }
  const auto ladder = enumerate_embeddings(catalog(GadgetKind::DoubleLadder).graph, 2, 5);
  const bool unique = ladder.complete && ladder.drawings.size() == 1 &&
                      ladder.drawings[0].size() == Point{5, 5, 1};
  const GadgetReport plug = verify_gadget(catalog(GadgetKind::ThreePlug));
  const bool pair = plug.pair_extent && std::min(plug.pair_extent->x, plug.pair_extent->y) == 7 &&
                    std::max(plug.pair_extent->x, plug.pair_extent->y) == 14;
  const GadgetReport wind = verify_gadget(catalog(GadgetKind::Windmill));
  const bool orders = wind.circular_orders.size() == 3;
  const bool square = catalog(GadgetKind::Square).footprint == Point{2, 2, 0};
  out << "ladder unique 5x5: " << (unique ? "yes" : "no") << "; plug pair 7x14: " << (pair ? "yes" : "no")
      << "; windmill orders: " << wind.circular_orders.size() << "/3; square 1x1 cell: "
      << (square ? "yes" : "no");
  return {ok && unique && pair && orders && square, out.str()};
}

// 6 ---------------------------------------------------------------------------
struct Labeled {
  Graph graph;
  OrientationMap f;
  Verdict verdict;
};

/// Every labeling with at most two edges per axis at each vertex, over the
/// connected bipartite graphs with 2..5 vertices.
std::vector<Labeled> micro_suite() {
  std::vector<Labeled> out;
  for (const Graph& g : connected_graphs(5, 4)) {
    if (g.vertex_count() < 2 || !is_bipartite(g)) continue;
    const int m = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      OrientationMap f(g);
      for (int e = 0; e < m; ++e) f[e] = (mask >> e) & 1 ? Orient::Vertical : Orient::Horizontal;
      bool ok = true;
      for (VertexId v = 0; v < g.vertex_count() && ok; ++v) {
        int h = 0;
        for (EdgeId e : g.incident_edges(v)) h += f[e] == Orient::Horizontal;
        ok = h <= 2 && g.degree(v) - h <= 2;
      }
      if (ok) out.push_back({g, f, oriented_verdict(g, f)});
    }
  }
  return out;
}

Outcome substitution_suite() {
  using Clock = std::chrono::steady_clock;
  const std::vector<Labeled> suite = micro_suite();
  int yes = 0, no = 0;
  for (const auto& l : suite) (l.verdict == Verdict::Yes ? yes : no)++;

  struct Tally {
    int yes = 0, no = 0, bad = 0;
  };
  std::map<std::string, Tally> tally;
  double slowest = 0;
  auto record = [&](const std::string& name, Verdict want, const std::function<Verdict()>& got) {
    const auto t0 = Clock::now();
    const Verdict v = got();
    slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - t0).count());
    Tally& t = tally[name];
    (want == Verdict::Yes ? t.yes : t.no)++;
    if (v != want) ++t.bad;
  };

  for (const Labeled& l : suite) {
    record("double-ladder", l.verdict, [&] {
      const Substitution s = double_ladder_substitution(l.graph, l.f);
      return oriented_verdict(s.graph, s.orientation);
    });
    record("square", l.verdict, [&] {
      return free_verdict(square_substitution(l.graph, l.f).graph, 2);
    });
    if (l.graph.max_degree() <= 3)
      record("three-plug", l.verdict, [&] {
        const Substitution s = three_plug_substitution(l.graph, l.f);
        return oriented_verdict(s.graph, s.orientation);
      });
    if (is_tree(l.graph))
      record("u-tree", l.verdict, [&] {
        const Substitution s = utree_substitution(l.graph, l.f);
        return oriented_verdict(s.graph, s.orientation);
      });
  }
  // No labeled tree on five vertices is blocked, so the u-tree also gets the
  // two smallest blocked trees.
  for (const DrawnGraph& d : {blocked_binary_tree(), blocked_cross_tree()})
    record("u-tree", oriented_verdict(d.graph, d.orientation), [&] {
      const Substitution s = utree_substitution(d.graph, d.orientation);
      return oriented_verdict(s.graph, s.orientation);
    });
  for (const Graph& g : connected_graphs(5, 4))
    if (g.vertex_count() >= 2)
      record("windmill", free_verdict(g, 2), [&] { return free_verdict(windmill_substitution(g).graph, 2); });

  bool ok = yes >= 10 && no >= 10;
  std::ostringstream out;
  out << suite.size() << " oriented graphs (" << yes << " yes, " << no << " no)";
  for (const auto& [name, t] : tally) {
    out << "; " << name << " " << t.yes << "+" << t.no << " mismatches " << t.bad;
    ok = ok && t.bad == 0 && t.yes > 0 && t.no > 0;
  }
  out << fmt("; slowest %.2fs", slowest);
  return {ok && slowest <= 300, out.str()};
}

// 7 ---------------------------------------------------------------------------
std::vector<NaeFormula> small_formulas() {
  std::vector<NaeFormula> out;
  for (int n = 1; n <= 2; ++n) {
    std::vector<Literal> lits;
    for (int v = 1; v <= n; ++v) lits.insert(lits.end(), {v, -v});
    std::sort(lits.begin(), lits.end());
    std::vector<Clause> clauses;
    const int k = static_cast<int>(lits.size());
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b)
        for (int c = b; c < k; ++c) clauses.push_back({lits[a], lits[b], lits[c]});
    out.push_back({n, {}});
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      out.push_back({n, {clauses[i]}});
      for (std::size_t j = i; j < clauses.size(); ++j) out.push_back({n, {clauses[i], clauses[j]}});
    }
  }
  return out;
}

Outcome end_to_end() {
  std::vector<NaeFormula> formulas = small_formulas();
  formulas.push_back(example_formula());
  int sat = 0, disagree = 0, bad_decode = 0, budget = 0;
  bool example_ok = false;
  for (const NaeFormula& phi : formulas) {
    const ExtendedSkeleton s = build_extended_skeleton(phi);
    SolveConstraints c;
    c.orientation = consistent_orientation(s);
    c.node_budget = kBudget;
    const SolveResult r = solve(s.graph, 2, c);
    const bool oracle = nae_satisfiable_bruteforce(phi).has_value();
    sat += oracle;
    if (r.verdict == Verdict::BudgetExceeded) ++budget;
    if ((r.verdict == Verdict::Yes) != oracle) ++disagree;
    if (r.embedding) {
      const bool good = nae_satisfies(phi, decode_assignment(s, *r.embedding));
      if (!good) ++bad_decode;
      if (&phi == &formulas.back()) example_ok = good;
    }
  }
  return {disagree == 0 && bad_decode == 0 && budget == 0 && example_ok,
          fmt("%zu formulas (%d satisfiable), %d disagreements, %d bad decodes, %d inconclusive; "
              "example decodes: %s",
              formulas.size(), sat, disagree, bad_decode, budget, example_ok ? "yes" : "no")};
}

// 8 ---------------------------------------------------------------------------
Outcome orientation_conformance() {
  std::vector<NaeFormula> family{example_formula(), {1, {{1, 1, -1}}}, {2, {{1, 2, -2}, {-1, -1, 2}}},
                                 {3, {{1, 2, 3}, {-1, -2, -3}}}};
  int checked = 0, wrong = 0;
  for (const NaeFormula& phi : family) {
    const ExtendedSkeleton s = build_extended_skeleton(phi);
    std::vector<OrientRule> rules;
    const OrientationMap f = consistent_orientation(s, &rules);
    auto expect = [&](EdgeId e, Orient o, OrientRule rule) {
      ++checked;
      if (f[e] != o || rules[e] != rule) ++wrong;
    };
    for (EdgeId e : s.flags) expect(e, Orient::Horizontal, OrientRule::Flag);
    for (std::size_t i = 0; i + 1 < s.main_cord.size(); ++i)
      expect(*s.graph.edge_id(s.main_cord[i], s.main_cord[i + 1]), Orient::Horizontal, OrientRule::MainCord);
    for (const auto& cord : s.transversal_cords)
      for (std::size_t i = 0; i + 1 < cord.size(); ++i)
        expect(*s.graph.edge_id(cord[i], cord[i + 1]), Orient::Vertical, OrientRule::TransversalCord);
    for (const VariableSite& site : s.provenance.variables)
      for (VertexId c : {site.positive_connector, site.negative_connector}) {
        ++checked;
        if (s.graph.degree(c) != 2) ++wrong;
        for (EdgeId e : s.graph.incident_edges(c)) expect(e, Orient::Vertical, OrientRule::Connector);
      }
    for (VertexId v = 0; v < s.graph.vertex_count(); ++v) {
      if (s.graph.degree(v) != 4) continue;
      int h = 0;
      for (EdgeId e : s.graph.incident_edges(v)) h += f[e] == Orient::Horizontal;
      ++checked;
      if (h != 2) ++wrong;
    }
  }
  return {wrong == 0, fmt("%zu skeletons, %d edge and vertex checks, %d violations", family.size(),
                          checked, wrong)};
}

// 9 ---------------------------------------------------------------------------
Outcome tables() {
  const std::string t1 = read_file(data_dir() + "/tables/table1.tsv");
  const std::string t2 = read_file(data_dir() + "/tables/table2.tsv");
  auto body_cells = [](const std::string& t) {
    int cells = 0;
    std::istringstream in(t);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::string cell;
      std::getline(row, cell, '\t');
      while (std::getline(row, cell, '\t')) ++cells;
    }
    return cells;
  };
  const bool same1 = render_table1() == t1, same2 = render_table2() == t2;
  // 2D: 15 degree sets (graphs and trees columns); 3D: 8x8 minus the empty corner.
  const int rows1 = body_cells(t1) / 2, cells2 = body_cells(t2) - 1;
  return {same1 && same2 && rows1 == 15 && cells2 == 63,
          fmt("table 1: %d rows %s; table 2: %d cells %s", rows1, same1 ? "match" : "DIFFER", cells2,
              same2 ? "match" : "DIFFER")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exhaustive oracle agreement (<= 7 vertices)", exhaustive_agreement},
      {"{1,4} recognizer vs solver", agreement_14},
      {"{3,4} graphs and 3D min degree 4 refuted", refute_34_and_3d},
      {"prism preserves immersibility (<= 6 vertices)", prism_agreement},
      {"gadget verification", gadget_verification},
      {"substitutions preserve verdicts", substitution_suite},
      {"end-to-end reduction", end_to_end},
      {"orientation rules per edge class", orientation_conformance},
      {"complexity tables", tables},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
