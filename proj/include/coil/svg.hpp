#pragma once

#include <cstdint>
#include <string>

#include "coil/diagram.hpp"

namespace coil {

/// Standalone SVG 1.1 drawing. Each connected piece is laid out by a Tutte
/// (barycentric) embedding of its rotation system with the largest face
/// outside, so the drawing honors the planar structure. Under-strands stop
/// short of their crossings. The seed picks among equally large outer
/// faces and rotates the outer polygon; output is otherwise fixed.
std::string render_svg(const PlanarDiagram& d, std::uint64_t seed = 0);

}  // namespace coil
