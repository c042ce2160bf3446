// Parallel solver against the serial reference on a fixed instance set.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gadget_fixtures.hpp"
#include "oracle.hpp"
#include "pgr/gadgets.hpp"
#include "pgr/skeleton.hpp"
#include "pgr/solver.hpp"

using namespace pgr;
using namespace pgr::test;

namespace {

struct Instance {
  std::string name;
  Graph graph;
  int dim = 2;
  std::optional<OrientationMap> orientation;
};

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::vector<Instance> set;
  set.push_back({"grid 5x5 free", make_grid(5, 5)});
  set.push_back({"K2,3 refuted", [] {
                   Graph g(5);
                   for (int a : {0, 1})
                     for (int b : {2, 3, 4}) g.add_edge(a, b);
                   return g;
                 }()});
  set.push_back({"hypercube 4 in 3D", make_hypercube(4), 3});
  std::mt19937 rng(3);
  set.push_back({"{1,4} animal", random_14(rng, 10, true)});
  set.push_back({"prism of C6 in 3D", prism(make_cycle(6)), 3});
  {
    const ExtendedSkeleton s = build_extended_skeleton(example_formula());
    set.push_back({"example skeleton oriented", s.graph, 2, consistent_orientation(s)});
  }
  {
    const DrawnGraph d = blocked_binary_tree();
    const Substitution u = utree_substitution(d.graph, d.orientation);
    set.push_back({"blocked u-tree oriented", u.graph, 2, u.orientation});
  }
  set.push_back({"windmill of 2x3 grid", windmill_substitution(make_grid(2, 3)).graph});
  set.push_back({"windmill of blocked tree", windmill_substitution(blocked_cross_tree().graph).graph});
  set.push_back({"hypercube 4 in 2D", make_hypercube(4)});
  {
    const ExtendedSkeleton s = build_extended_skeleton({1, {{1, 1, -1}}});
    set.push_back({"small skeleton free", s.graph});
  }
  set.push_back({"grid 4x4 in 3D", make_grid(4, 4), 3});

  std::printf("threads: %d, repetitions: %d\n", worker_threads(), reps);
  std::printf("%-28s %6s %8s %10s %10s %8s\n", "instance", "n", "verdict", "serial s", "parallel s",
              "speedup");
  int mismatches = 0;
  for (const Instance& in : set) {
    SolveConstraints c;
    c.orientation = in.orientation;
    c.node_budget = 100'000'000;
    SolveResult a, b;
    double ts = 1e30, tp = 1e30;
    for (int r = 0; r < reps; ++r) {
      ts = std::min(ts, seconds([&] { a = solve_serial(in.graph, in.dim, c); }));
      tp = std::min(tp, seconds([&] { b = solve(in.graph, in.dim, c); }));
    }
    if (a.verdict != b.verdict) ++mismatches;
    std::printf("%-28s %6d %8s %10.4f %10.4f %8.2f\n", in.name.c_str(), in.graph.vertex_count(),
                to_string(b.verdict).c_str(), ts, tp, tp > 0 ? ts / tp : 0.0);
  }

  // batch mode: many small independent solves
  const std::vector<Graph> small = connected_graphs(6, 4);
  double tb_serial = seconds([&] {
    for (const Graph& g : small) solve_serial(g, 2);
  });
  double tb_parallel = seconds([&] { solve_batch(small, 2); });
  std::printf("%-28s %6zu %8s %10.4f %10.4f %8.2f\n", "batch: graphs <= 6 vertices", small.size(), "-",
              tb_serial, tb_parallel, tb_parallel > 0 ? tb_serial / tb_parallel : 0.0);
  if (mismatches) std::printf("verdict mismatches: %d\n", mismatches);
  return mismatches == 0 ? 0 : 1;
}
