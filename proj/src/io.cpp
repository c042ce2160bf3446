#include "pgr/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pgr {

namespace {

[[noreturn]] void syntax_error(int line, int column, const std::string& what) {
  throw Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

/// Splits a line into integer tokens with their 1-based columns.
std::vector<std::pair<long long, int>> int_tokens(const std::string& line, int line_no) {
  std::vector<std::pair<long long, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (line[i] == '-' || line[i] == '+') ++i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(line[start]))) ||
        (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))))
      syntax_error(line_no, static_cast<int>(start) + 1, "expected an integer");
    out.emplace_back(std::stoll(line.substr(start, i - start)), static_cast<int>(start) + 1);
  }
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto toks = int_tokens(line, line_no);
    if (!g) {
      if (toks.size() != 1) syntax_error(line_no, 1, "expected the vertex count alone");
      if (toks[0].first < 0) syntax_error(line_no, toks[0].second, "negative vertex count");
      g.emplace(static_cast<int>(toks[0].first));
      continue;
    }
    if (toks.size() != 2) syntax_error(line_no, 1, "expected two vertex ids");
    const auto [u, cu] = toks[0];
    const auto [v, cv] = toks[1];
    const long long n = g->vertex_count();
    if (u < 0 || u >= n) syntax_error(line_no, cu, "vertex id out of range");
    if (v < 0 || v >= n) syntax_error(line_no, cv, "vertex id out of range");
    if (u == v) syntax_error(line_no, cu, "loop at vertex " + std::to_string(u));
    if (g->has_edge(static_cast<int>(u), static_cast<int>(v)))
      syntax_error(line_no, cu, "duplicate edge");
    g->add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!g) throw Error("line 1, column 1: missing vertex count");
  return std::move(*g);
}

std::string serialize_graph(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("edge entries must be [u, v] pairs");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("labels"))
      for (const auto& [key, value] : j.at("labels").items())
        g.set_label(std::stoi(key), value.get<std::string>());
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("graph json: ") + ex.what());
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges) j["edges"].push_back({e.u, e.v});
  if (!g.labels().empty()) {
    j["labels"] = nlohmann::json::object();
    for (const auto& [v, label] : g.labels()) j["labels"][std::to_string(v)] = label;
  }
  return j;
}

Graph parse_graph_any(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw Error(std::string("graph json: ") + ex.what());
    }
    return graph_from_json(j);
  }
  return parse_graph(text);
}

nlohmann::json embedding_to_json(const Embedding& e) {
  nlohmann::json j;
  j["dim"] = e.dim;
  nlohmann::json points = nlohmann::json::object();
  for (std::size_t v = 0; v < e.points.size(); ++v) {
    const auto& p = e.points[v];
    points[std::to_string(v)] =
        e.dim == 2 ? nlohmann::json::array({p.x, p.y}) : nlohmann::json::array({p.x, p.y, p.z});
  }
  j["points"] = std::move(points);
  return j;
}

Embedding embedding_from_json(const nlohmann::json& j) {
  try {
    Embedding e;
    e.dim = j.at("dim").get<int>();
    if (e.dim != 2 && e.dim != 3) throw Error("embedding dim must be 2 or 3");
    const auto& pts = j.at("points");
    e.points.resize(pts.size());
    std::vector<char> seen(pts.size(), 0);
    for (const auto& [key, value] : pts.items()) {
      const int v = std::stoi(key);
      if (v < 0 || v >= static_cast<int>(pts.size()) || seen[v])
        throw Error("embedding vertex ids must be 0..n-1");
      if (static_cast<int>(value.size()) != e.dim) throw Error("point arity does not match dim");
      seen[v] = 1;
      e.points[v] = {value[0].get<int>(), value[1].get<int>(), e.dim == 3 ? value[2].get<int>() : 0};
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("embedding json: ") + ex.what());
  }
}

std::string serialize_orientation(const Graph& g, const OrientationMap& f) {
  std::ostringstream out;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const char c = f[id] == Orient::Horizontal ? 'H' : f[id] == Orient::Vertical ? 'V' : 'U';
    out << g.edge(id).u << ' ' << g.edge(id).v << ' ' << c << '\n';
  }
  return out.str();
}

OrientationMap parse_orientation(const Graph& g, const std::string& text) {
  OrientationMap f(g);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    int u, v;
    std::string label;
    if (!(ls >> u >> v >> label)) syntax_error(line_no, 1, "expected \"u v H|V\"");
    const auto id = g.edge_id(u, v);
    if (!id) syntax_error(line_no, 1, "not an edge of the graph");
    if (label == "H")
      f[*id] = Orient::Horizontal;
    else if (label == "V")
      f[*id] = Orient::Vertical;
    else if (label == "U")
      f[*id] = Orient::Undefined;
    else
      syntax_error(line_no, static_cast<int>(line.find(label)) + 1, "label must be H or V");
  }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace pgr
