#include <doctest.h>

#include <chrono>

#include "pgr/skeleton.hpp"
#include "pgr/solver.hpp"

using namespace pgr;

namespace {

SolveResult solve_oriented(const ExtendedSkeleton& s) {
  SolveConstraints c;
  c.orientation = consistent_orientation(s);
  return solve(s.graph, 2, c);
}

}  // namespace

TEST_CASE("skeleton structure") {
  const auto s = build_extended_skeleton(example_formula());
  CHECK(is_tree(s.graph));
  CHECK(degree_set(s.graph).subset_of(DegreeSet{1, 2, 4}));
  CHECK(validate_skeleton_structure(s).empty());
  CHECK(s.transversal_cords.size() == 2 * 4 + 4);
  int absent = 0;
  for (const auto& c : example_formula().clauses)
    for (int v = 1; v <= 4; ++v)
      for (int lit : {v, -v}) absent += std::find(c.begin(), c.end(), lit) == c.end();
  CHECK(static_cast<int>(s.flags.size()) == absent);
}

TEST_CASE("validation catches broken annotations") {
  auto s = build_extended_skeleton(example_formula());
  auto moved = s;
  moved.flags.pop_back();
  CHECK_FALSE(validate_skeleton_structure(moved).empty());
  ExtendedSkeleton path;
  path.graph = make_path(5);
  CHECK_FALSE(validate_skeleton_structure(path).empty());
  CHECK_THROWS_AS(consistent_orientation(path), Error);
}

TEST_CASE("two main cord candidates are rejected") {
  const auto one = build_extended_skeleton(NaeFormula{1, {{1, 1, -1}}});
  ExtendedSkeleton two;
  two.graph = disjoint_union(one.graph, one.graph);
  CHECK_THROWS_WITH_AS(consistent_orientation(two), doctest::Contains("main cord"), Error);
}

TEST_CASE("orientation labels by edge class") {
  const auto s = build_extended_skeleton(example_formula());
  std::vector<OrientRule> rules;
  const auto f = consistent_orientation(s, &rules);
  CHECK(f.complete());
  for (EdgeId e : s.flags) {
    CHECK(f[e] == Orient::Horizontal);
    CHECK(rules[e] == OrientRule::Flag);
  }
  for (std::size_t i = 0; i + 1 < s.main_cord.size(); ++i)
    CHECK(f[*s.graph.edge_id(s.main_cord[i], s.main_cord[i + 1])] == Orient::Horizontal);
  for (const auto& cord : s.transversal_cords)
    for (std::size_t i = 0; i + 1 < cord.size(); ++i)
      CHECK(f[*s.graph.edge_id(cord[i], cord[i + 1])] == Orient::Vertical);
  for (VertexId v = 0; v < s.graph.vertex_count(); ++v) {
    int h = 0;
    for (EdgeId e : s.graph.incident_edges(v)) h += f[e] == Orient::Horizontal;
    if (s.graph.degree(v) == 4) CHECK(h == 2);
  }
  CHECK(consistent_orientation(s).labels == f.labels);
}

TEST_CASE("end-to-end on small formulas") {
  const std::vector<NaeFormula> cases{
      {1, {{1, 1, 1}}},
      {1, {{1, -1, 1}}},
      {2, {{1, 2, 2}}},
      {2, {{1, 2, -2}, {-1, -1, 2}}},
      {2, {{1, 1, 2}, {-1, -1, -2}}},
  };
  for (const auto& phi : cases) {
    const auto s = build_extended_skeleton(phi);
    const auto r = solve_oriented(s);
    const auto oracle = nae_satisfiable_bruteforce(phi);
    REQUIRE(r.verdict != Verdict::BudgetExceeded);
    CHECK((r.verdict == Verdict::Yes) == oracle.has_value());
    if (r.embedding) CHECK(nae_satisfies(phi, decode_assignment(s, *r.embedding)));
    SolveConstraints free;
    free.node_budget = 5'000'000;
    const auto u = solve_serial(s.graph, 2, free);
    if (u.verdict != Verdict::BudgetExceeded) CHECK(u.verdict == r.verdict);
    if (u.embedding) CHECK(nae_satisfies(phi, decode_assignment(s, *u.embedding)));
  }
}

TEST_CASE("example formula decodes to a NAE witness") {
  const auto s = build_extended_skeleton(example_formula());
  const auto r = solve_oriented(s);
  REQUIRE(r.verdict == Verdict::Yes);
  CHECK(nae_satisfies(example_formula(), decode_assignment(s, *r.embedding)));
}
