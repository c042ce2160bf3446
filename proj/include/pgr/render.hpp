#pragma once

#include <string>

#include "pgr/embedding.hpp"
#include "pgr/graph.hpp"

namespace pgr {

/// Text drawing with '+' at vertices, '-' and '|' along edges, y growing
/// upward. 2D only.
std::string render_ascii(const Graph& g, const Embedding& e);

/// SVG at 20px per lattice unit, stroke width 2. 3D drawings use an oblique
/// projection of the z axis.
std::string render_svg(const Graph& g, const Embedding& e);

}  // namespace pgr
