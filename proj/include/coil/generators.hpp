#pragma once

#include <cstdint>
#include <string>

#include "coil/diagram.hpp"
#include "coil/slope.hpp"

namespace coil {

/// Parameters of a (p, q) double coil knot with n1 and n2 full twists in
/// its two generalized twist regions.
struct CoilSpec {
  std::int64_t p = 1;
  std::int64_t q = 2;
  std::int64_t n1 = 1;
  std::int64_t n2 = 1;

  /// Throws PreconditionViolation for q < 2, p outside (0, q) or a zero
  /// twist count; NotAKnot when gcd(p, q) != 1.
  void validate() const;
  Slope slope() const { return Slope(p, q); }
  /// q (q - 1) (|n1| + |n2|), computed without building the diagram.
  std::int64_t crossing_count() const;
  std::string str() const;
};

/// Standard alternating 2-bridge diagram: a 4-plat with one twist region
/// of a_i crossings per term.
PlanarDiagram gen_two_bridge(const ContinuedFraction& c);

/// The 2-bridge diagram of p/q with a clasp component around the two
/// strands where the next twist region would sit.
PlanarDiagram gen_clasped_two_bridge(const Slope& s);

/// Planar curve of slope p/q with a full-twist braid on the q strands
/// crossing each of D1 and D2.
PlanarDiagram gen_double_coil(const CoilSpec& spec);

/// Planar curve of slope p/q plus the crossing circles C1 (around D1) and
/// C2 (around D2).
PlanarDiagram gen_augmented(const Slope& s);

/// 1/n filling on a provenance-marked crossing circle: the circle is
/// removed and n full twists are laid into the strands it encircled.
PlanarDiagram fill_crossing_circle(const PlanarDiagram& d, int circle_component, std::int64_t n);

struct GeneralizedTwistCount {
  std::size_t count = 0;
  bool exact = false;  // false: greedy upper bound from bigon chains
};

GeneralizedTwistCount generalized_twist_regions(const PlanarDiagram& d);

}  // namespace coil
