#include "pgr/render.hpp"

#include <sstream>

namespace pgr {

namespace {

constexpr int kUnit = 20;
constexpr int kMargin = 10;

}  // namespace

std::string render_ascii(const Graph& g, const Embedding& e) {
  if (e.dim != 2) throw Error("ascii rendering requires a 2D embedding");
  if (!validate_embedding(g, e)) throw Error("cannot render an invalid embedding");
  if (e.points.empty()) return "";
  const auto [lo, hi] = e.bounds();
  const int width = 2 * (hi.x - lo.x) + 1;
  const int height = 2 * (hi.y - lo.y) + 1;
  std::vector<std::string> canvas(height, std::string(width, ' '));
  auto cell = [&](int x2, int y2) -> char& { return canvas[height - 1 - y2][x2]; };
  for (const auto& p : e.points) cell(2 * (p.x - lo.x), 2 * (p.y - lo.y)) = '+';
  for (const auto& edge : g.edges()) {
    const Point a = e.points[edge.u] - lo;
    const Point b = e.points[edge.v] - lo;
    cell(a.x + b.x, a.y + b.y) = a.y == b.y ? '-' : '|';
  }
  std::string out;
  for (auto& row : canvas) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Graph& g, const Embedding& e) {
  if (!validate_embedding(g, e)) throw Error("cannot render an invalid embedding");
  std::vector<std::pair<double, double>> xy;
  double max_x = 0, max_y = 0;
  if (!e.points.empty()) {
    const auto [lo, hi] = e.bounds();
    for (const auto& p0 : e.points) {
      const Point p = p0 - lo;
      const int top = hi.y - lo.y;
      const double x = p.x + 0.5 * p.z;
      const double y = (top - p.y) + 0.5 * ((hi.z - lo.z) - p.z);
      xy.emplace_back(kMargin + kUnit * x, kMargin + kUnit * y);
      max_x = std::max(max_x, xy.back().first);
      max_y = std::max(max_y, xy.back().second);
    }
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << max_x + kMargin << "\" height=\""
      << max_y + kMargin << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto& edge : g.edges())
    out << "<line x1=\"" << xy[edge.u].first << "\" y1=\"" << xy[edge.u].second << "\" x2=\""
        << xy[edge.v].first << "\" y2=\"" << xy[edge.v].second << "\"/>\n";
  out << "</g>\n<g fill=\"black\">\n";
  for (std::size_t v = 0; v < xy.size(); ++v)
    out << "<circle cx=\"" << xy[v].first << "\" cy=\"" << xy[v].second << "\" r=\"3\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace pgr
