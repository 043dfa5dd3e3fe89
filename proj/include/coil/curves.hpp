#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coil/slope.hpp"

namespace coil {

// The four framing arcs of the projection sphere. D1 and D2 join the two
// punctures of each crossing circle; A and A' join a puncture of C1 to one
// of C2. In the flattened picture the front square has D1 as its bottom
// side, D2 as its top side, A on the left and A' on the right; the back
// square is the outside region.
enum class Side { D1 = 0, D2 = 1, A = 2, APrime = 3 };

/// A tick on one framing arc, 0-based. Ticks on D1/D2 are numbered left to
/// right, ticks on A/A' bottom to top.
struct Tick {
  Side side;
  int index;
  friend bool operator==(const Tick&, const Tick&) = default;
};

/// Arc of the curve inside one of the two squares, joining two ticks.
struct CurveArc {
  Tick a;
  Tick b;
};

/// Connect-the-dots realization of a slope on the framed sphere.
struct FramedCurve {
  Slope slope;
  // Intersections with (D1, D2, A, A').
  std::array<std::int64_t, 4> tick_counts;
  std::vector<CurveArc> front;
  std::vector<CurveArc> back;
};

/// Straight-line arcs for the (not necessarily reduced) pair (p, q), q >= 0.
/// Exposed separately so unreduced pairs can be traced.
FramedCurve curve_coordinates_raw(std::int64_t p, std::int64_t q);
FramedCurve curve_coordinates(const Slope& s);

struct TraceResult {
  int loops = 0;      // closed components of the realization
  bool simple = true; // arcs inside each square are pairwise disjoint
};

/// Tracing oracle: follows arcs through the ticks.
TraceResult trace_curve(const FramedCurve& curve);

/// Minimal intersection of two closed curves: 2|p1 q2 - p2 q1|.
std::int64_t curve_curve_intersection(const Slope& s1, const Slope& s2);
/// Minimal intersection of an arc with a closed curve: |p_arc q - q_arc p|.
std::int64_t arc_curve_intersection(const Slope& arc, const Slope& curve);

enum class IntersectionMode { CurveCurve, ArcCurve };

inline constexpr std::int64_t kDefaultOracleCap = 12;

/// Segment in the plane cover, endpoints exact rationals num/den.
struct CoverPoint {
  __int128 x_num, y_num, den;
};
struct CoverSegment {
  CoverPoint from, to;
};

/// Straight representatives lifted to R^2 \ Z^2 and clipped to the
/// fundamental domain [0,2) x [0,1) of the pillowcase group.
struct LatticeTrace {
  std::vector<CoverSegment> first;
  std::vector<CoverSegment> second;
  std::int64_t crossings = 0;
};

LatticeTrace lattice_trace(const Slope& s1, const Slope& s2, IntersectionMode mode,
                           std::int64_t cap = kDefaultOracleCap);

/// Independent brute-force count of crossings between straight lifts.
/// Throws OracleCapExceeded when |p| or q of either slope exceeds cap.
std::int64_t brute_force_intersection(const Slope& s1, const Slope& s2, IntersectionMode mode,
                                      std::int64_t cap = kDefaultOracleCap);

/// Full Dehn twists about the 1/0 curve: p/q -> (p + count q)/q.
Slope dehn_twist(const Slope& s, const Slope& about, std::int64_t count);

/// Standalone SVG drawing of the realization: front square on the left,
/// back square (seen through the sphere) on the right.
std::string render_curve_svg(const FramedCurve& curve);

}  // namespace coil
