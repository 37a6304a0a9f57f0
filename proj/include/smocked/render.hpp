#pragma once

#include "smocked/path.hpp"
#include "smocked/pattern.hpp"

#include <string>

namespace smocked {

// SVG picture of a pattern and an optional route: one line element per
// stitch, one polyline with an arrowhead per route segment. One user unit
// equals one plane unit and the origin sits at the center, y up.
std::string render_svg(const Pattern& pattern, const Path* route = nullptr);

}  // namespace smocked
