#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pgr {

/// Signed 1-based variable index: +i is x_i, -i is its negation.
using Literal = int;
using Clause = std::array<Literal, 3>;

/// 3CNF formula read under not-all-equal semantics.
struct NaeFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;

  /// Throws pgr::Error if a literal is zero or names a variable out of range.
  void validate() const;
};

/// Total assignment; values[i-1] is the value of x_i.
struct Assignment {
  std::vector<bool> values;

  bool value(Literal lit) const;
  Assignment complement() const;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// True iff every clause has a true literal and a false literal under `a`.
bool nae_satisfies(const NaeFormula& phi, const Assignment& a);

/// Largest variable count the brute-force oracle accepts.
inline constexpr int kBruteForceVariableLimit = 24;

/// Lexicographically first NAE-satisfying assignment (F < T, x_1 most
/// significant), or nullopt when none exists.
std::optional<Assignment> nae_satisfiable_bruteforce(const NaeFormula& phi);

/// DIMACS CNF reader. Every clause must have exactly three nonzero literals.
NaeFormula parse_dimacs(const std::string& text);
std::string serialize_dimacs(const NaeFormula& phi);

/// (¬x2 ∨ x3 ∨ ¬x4) ∧ (x1 ∨ x2 ∨ x4) ∧ (x1 ∨ ¬x3 ∨ ¬x4)
NaeFormula example_formula();

}  // namespace pgr
