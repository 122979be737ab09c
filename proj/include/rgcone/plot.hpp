#pragma once

#include <string>

#include "rgcone/generation.hpp"

namespace rgcone {

/// SVG picture of a planar generating set on [-extent, extent]^2: the rays,
/// each piece's P, the points of R and the orbit of the first R point under
/// the first generator.  Throws InvalidArgument unless the cone is planar.
std::string plot_2d_svg(const GeneratingSet& gs, long extent = 12);

}  // namespace rgcone
