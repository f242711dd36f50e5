#pragma once

#include "hds/kernel.hpp"

#include <string>
#include <vector>

namespace hds {

struct RenderInput {
    std::string name;
    std::vector<MultiCurve> curves; // one colour per collection
};

// Triangles of the coordinate triangulation laid out side by side with edge labels; every
// traced bundle becomes one path element. Bundles heavier than max_strands are sampled.
std::string render_svg(const Surface& S, const std::vector<RenderInput>& collections, int max_strands = 8);

} // namespace hds
