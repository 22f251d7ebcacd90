#pragma once

#include <string>

#include "braidfaces/arrangement.hpp"

namespace braidfaces {

struct RenderOptions {
    double pixels = 480;      // output square size
    bool label_faces = false;  // annotate each face with its marked tree
    int label_arity = -1;      // tree arity for labels, default A.m()
};

// Draws the lines of a dimension-3 arrangement inside the plane
// x1 + x2 + x3 = 0, clipped to a square window of side 2(m+2).
std::string render_arrangement_svg(const Arrangement& A, const RenderOptions& opts = {});

}  // namespace braidfaces
