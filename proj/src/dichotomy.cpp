#include "pgr/dichotomy.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string_view>

#include "pgr/io.hpp"

namespace pgr {

std::string to_string(Complexity c) {
  switch (c) {
    case Complexity::Polynomial: return "Polynomial";
    case Complexity::NPComplete: return "NPComplete";
    case Complexity::OpenCase: return "OpenCase";
    case Complexity::NoSuchInput: return "NoSuchInput";
  }
  return "?";
}

namespace {

// Cell syntax: tag, optional '*' for base cases, optional "[prior]".
struct Row1 {
  std::uint32_t mask;
  std::string_view graphs;
  std::string_view trees;
};

constexpr std::uint32_t bits(std::initializer_list<int> ds) {
  std::uint32_t m = 0;
  for (int d : ds) m |= 1u << d;
  return m;
}

constexpr std::array<Row1, 15> kTable1{{
    {bits({1}), "P", "P"},
    {bits({2}), "P", "—"},
    {bits({3}), "P", "—"},
    {bits({4}), "P", "—"},
    {bits({1, 2}), "P*", "P"},
    {bits({1, 3}), "NPC", "NPC*"},
    {bits({1, 4}), "P*", "P"},
    {bits({2, 3}), "NPC*", "—"},
    {bits({2, 4}), "NPC*", "—"},
    {bits({3, 4}), "P*", "—"},
    {bits({1, 2, 3}), "NPC[prior]", "NPC*[prior]"},
    {bits({1, 2, 4}), "NPC[prior]", "NPC*[prior]"},
    {bits({1, 3, 4}), "NPC", "NPC"},
    {bits({2, 3, 4}), "NPC", "—"},
    {bits({1, 2, 3, 4}), "NPC[prior]", "NPC[prior]"},
}};

// Rows: subsets of {1,2,3}; columns: subsets of {4,5,6}; both in the order
// {}, {a}, {b}, {c}, {a,b}, {a,c}, {b,c}, {a,b,c}.
constexpr std::array<std::array<std::string_view, 8>, 8> kTable2{{
    {"—", "P", "P", "P", "P", "P", "P", "P*"},
    {"P", "?", "?", "P*", "NPC2*", "NPC2*", "?", "NPC2"},
    {"P", "NPC1*", "?", "?", "NPC1", "NPC1", "?", "NPC1"},
    {"?", "NPC1*", "NPC1*", "?", "NPC1", "NPC1", "NPC1", "NPC1"},
    {"P*", "NPC1", "NPC2*", "?", "NPC1", "NPC1", "NPC2", "NPC1"},
    {"?", "NPC1", "NPC1", "NPC2*", "NPC1", "NPC1", "NPC1", "NPC1"},
    {"?", "NPC1", "NPC1", "?", "NPC1", "NPC1", "NPC1", "NPC1"},
    {"?", "NPC1", "NPC1", "NPC2", "NPC1", "NPC1", "NPC1", "NPC1"},
}};

constexpr std::array<std::uint32_t, 8> kSubsetOrder{0b000, 0b001, 0b010, 0b100,
                                                   0b011, 0b101, 0b110, 0b111};

int subset_index(std::uint32_t three_bits) {
  for (int i = 0; i < 8; ++i)
    if (kSubsetOrder[i] == three_bits) return i;
  return -1;
}

DichotomyClass parse_cell(std::string_view cell, std::string applies_to, std::string where) {
  DichotomyClass c;
  c.applies_to = std::move(applies_to);
  c.source = std::move(where) + ":" + std::string(cell);
  if (const auto p = cell.find("[prior]"); p != std::string_view::npos) {
    c.prior = true;
    cell = cell.substr(0, p);
  }
  if (!cell.empty() && cell.back() == '*') {
    c.base = true;
    cell.remove_suffix(1);
  }
  c.tag = std::string(cell);
  if (cell == "P")
    c.complexity = Complexity::Polynomial;
  else if (cell.starts_with("NPC"))
    c.complexity = Complexity::NPComplete;
  else if (cell == "?")
    c.complexity = Complexity::OpenCase;
  else
    c.complexity = Complexity::NoSuchInput;
  return c;
}

void check_members(const DegreeSet& d, int dim) {
  if (dim != 2 && dim != 3) throw Error("dimension must be 2 or 3");
  if (d.empty()) throw Error("empty degree set");
  if (d.contains(0)) throw Error("degree 0 is not classified");
  if (d.max() > 2 * dim)
    throw Error("degree " + std::to_string(d.max()) + " exceeds the lattice maximum " +
                std::to_string(2 * dim));
}

const Row1& table1_row(const DegreeSet& d) {
  for (const auto& row : kTable1)
    if (row.mask == d.mask()) return row;
  throw Error("no table row for " + d.to_string());
}

std::string cell_text(const DichotomyClass& c) {
  return c.tag + (c.base ? "*" : "") + (c.prior ? "[prior]" : "");
}

}  // namespace

DichotomyClass classify(const DegreeSet& d, int dim) {
  check_members(d, dim);
  if (dim == 2)
    return parse_cell(table1_row(d).graphs, "graphs", "2d:" + d.to_string() + ":graphs");
  const std::uint32_t low = (d.mask() >> 1) & 0b111;
  const std::uint32_t high = (d.mask() >> 4) & 0b111;
  return parse_cell(kTable2[subset_index(low)][subset_index(high)], "graphs",
                    "3d:" + d.to_string());
}

DichotomyClass classify_trees(const DegreeSet& d) {
  check_members(d, 2);
  return parse_cell(table1_row(d).trees, "trees", "2d:" + d.to_string() + ":trees");
}

std::string render_table1() {
  std::ostringstream out;
  out << "D\tgraphs\ttrees\n";
  for (const auto& row : kTable1) {
    const DegreeSet d = DegreeSet::from_mask(row.mask);
    out << d.to_string() << '\t' << cell_text(classify(d, 2)) << '\t'
        << cell_text(classify_trees(d)) << '\n';
  }
  return out.str();
}

std::string render_table2() {
  auto low_set = [](std::uint32_t s) { return DegreeSet::from_mask(s << 1); };
  auto high_set = [](std::uint32_t s) { return DegreeSet::from_mask(s << 4); };
  std::ostringstream out;
  out << "rows\\cols";
  for (std::uint32_t c : kSubsetOrder) out << '\t' << high_set(c).to_string();
  out << '\n';
  for (std::uint32_t r : kSubsetOrder) {
    out << low_set(r).to_string();
    for (std::uint32_t c : kSubsetOrder) {
      const DegreeSet d = low_set(r) | high_set(c);
      out << '\t' << (d.empty() ? std::string("—") : cell_text(classify(d, 3)));
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const RecognitionResult& r) {
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  j["method"] = r.method;
  if (r.witness) j["witness"] = embedding_to_json(*r.witness);
  if (r.classification)
    j["classification"] = {{"complexity", to_string(r.classification->complexity)},
                           {"source", r.classification->source}};
  return j;
}

}  // namespace pgr
