#include "pgr/formula.hpp"

#include <cstdint>
#include <cstdlib>
#include <sstream>

#include "pgr/graph.hpp"

namespace pgr {

void NaeFormula::validate() const {
  if (variable_count < 1) throw Error("formula needs at least one variable");
  for (std::size_t c = 0; c < clauses.size(); ++c)
    for (Literal lit : clauses[c])
      if (lit == 0 || std::abs(lit) > variable_count)
        throw Error("clause " + std::to_string(c + 1) + " has literal " + std::to_string(lit) +
                    " outside 1.." + std::to_string(variable_count));
}

bool Assignment::value(Literal lit) const {
  const bool v = values.at(std::abs(lit) - 1);
  return lit > 0 ? v : !v;
}

Assignment Assignment::complement() const {
  Assignment out = *this;
  out.values.flip();
  return out;
}

bool nae_satisfies(const NaeFormula& phi, const Assignment& a) {
  for (const auto& clause : phi.clauses) {
    bool any_true = false, any_false = false;
    for (Literal lit : clause) (a.value(lit) ? any_true : any_false) = true;
    if (!any_true || !any_false) return false;
  }
  return true;
}

std::optional<Assignment> nae_satisfiable_bruteforce(const NaeFormula& phi) {
  phi.validate();
  const int n = phi.variable_count;
  if (n > kBruteForceVariableLimit)
    throw Error("brute-force oracle limited to " + std::to_string(kBruteForceVariableLimit) +
                " variables");
  Assignment a;
  a.values.assign(n, false);
  // Counting up with x_1 as the most significant bit walks assignments in
  // lexicographic order with F < T.
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (int i = 0; i < n; ++i) a.values[i] = (code >> (n - 1 - i)) & 1u;
    if (nae_satisfies(phi, a)) return a;
  }
  return std::nullopt;
}

NaeFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  NaeFormula phi;
  int declared_clauses = -1;
  std::vector<Literal> pending;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (!(ls >> fmt >> phi.variable_count >> declared_clauses) || fmt != "cnf")
        throw Error("line " + std::to_string(line_no) + ": malformed problem line");
      continue;
    }
    if (declared_clauses < 0)
      throw Error("line " + std::to_string(line_no) + ": clause before problem line");
    std::istringstream toks(line);
    long lit;
    while (toks >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw Error("line " + std::to_string(line_no) + ": clause has " +
                      std::to_string(pending.size()) + " literals, expected 3");
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(static_cast<Literal>(lit));
      }
    }
    if (!toks.eof()) throw Error("line " + std::to_string(line_no) + ": bad token");
  }
  if (!pending.empty()) throw Error("unterminated clause at end of input");
  if (declared_clauses < 0) throw Error("missing problem line");
  if (static_cast<int>(phi.clauses.size()) != declared_clauses)
    throw Error("problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                std::to_string(phi.clauses.size()));
  phi.validate();
  return phi;
}

std::string serialize_dimacs(const NaeFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.variable_count << ' ' << phi.clauses.size() << '\n';
  for (const auto& c : phi.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

NaeFormula example_formula() {
  return NaeFormula{4, {{-2, 3, -4}, {1, 2, 4}, {1, -3, -4}}};
}

}  // namespace pgr
