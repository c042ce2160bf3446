#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgr/embedding.hpp"
#include "pgr/graph.hpp"

namespace pgr {

enum class Verdict { Yes, No, BudgetExceeded };

std::string to_string(Verdict v);

struct SolveConstraints {
  /// Restricts Horizontal edges to axis 0 and Vertical edges to axis 1 (2D only).
  std::optional<OrientationMap> orientation;
  /// Maximum extent in lattice points per axis.
  std::optional<Point> box;
  /// Cap on search nodes (successful placements). In the parallel solver the
  /// cap applies to each subtree task separately.
  std::optional<std::uint64_t> node_budget;
  /// Bipartiteness and max-degree short-circuits before search.
  bool prefilter = true;
};

struct SolveResult {
  Verdict verdict = Verdict::No;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

/// Exact search for a unit-length embedding of a connected graph.
///
/// Vertices are placed in BFS order from the lowest-id vertex of maximum
/// degree, each next to its BFS parent. Lattice symmetries are broken during
/// the search: the first use of every axis must be in the positive direction,
/// and (without an orientation) axes are introduced in index order. Pendant
/// leaves sharing a parent are placed in increasing direction order once the
/// symmetry is fully fixed. The first embedding found is deterministic.
///
/// Splits the search tree into prefix tasks run under OpenMP; the reported
/// embedding is the one solve_serial would return whenever neither hits the
/// budget.
SolveResult solve(const Graph& g, int dim, const SolveConstraints& c = {});

/// Single-threaded reference search.
SolveResult solve_serial(const Graph& g, int dim, const SolveConstraints& c = {});

/// Solves independent graphs in parallel; results follow input order.
std::vector<SolveResult> solve_batch(std::span<const Graph> graphs, int dim,
                                     const SolveConstraints& c = {});

struct EnumerationResult {
  std::vector<CanonicalDrawing> drawings;  // ascending
  bool complete = false;                   // search exhausted below the limit
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
};

/// Distinct canonical drawings, up to `limit` of them.
EnumerationResult enumerate_embeddings(const Graph& g, int dim, std::size_t limit,
                                       const SolveConstraints& c = {});

enum class VisitStatus { Complete, Stopped, BudgetExceeded };

/// Visits one labeled embedding per lattice-symmetry orbit (no pendant-leaf
/// symmetry breaking). The visitor returns false to stop.
VisitStatus for_each_embedding(const Graph& g, int dim, const SolveConstraints& c,
                               const std::function<bool(const Embedding&)>& visit);

/// Worker count: omp_get_max_threads() capped by the PGR_THREADS variable.
int worker_threads();

}  // namespace pgr
