#pragma once

#include "nielsen/coincidence.hpp"

#include <string>
#include <vector>

namespace nielsen {

// Rendering parameters. The unit square (domain times value, the torus
// fundamental domain) is mapped affinely onto the canvas; coordinates are
// decimalized with fixed 9-digit precision only at serialization time, so
// equal inputs give byte-identical output.
struct RenderSpec {
    int width = 720;
    int height = 720;
    int margin = 36;
    std::vector<std::string> strokes = {"#1f6fb2", "#c23b22"};  // per map
    Rational marker_radius = Rational(1, 80);                   // unit-square fraction
};

// Draws each branch mod 1, splitting strokes where a lift crosses an
// integer, and circles every graph intersection of the pair when a second
// map is given.
std::string render_svg(const MultiMap& f, const MultiMap* g, const RenderSpec& spec = {});

}  // namespace nielsen
