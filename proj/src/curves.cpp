#include "coil/curves.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <sstream>

#include "coil/error.hpp"

namespace coil {

namespace {

using i128 = __int128;

// Exact rational with positive denominator.
struct Q {
  i128 num;
  i128 den;
};

Q make_q(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}
Q add(Q a, Q b) { return make_q(a.num * b.den + b.num * a.den, a.den * b.den); }
Q sub(Q a, Q b) { return make_q(a.num * b.den - b.num * a.den, a.den * b.den); }
Q mul(i128 k, Q a) { return make_q(k * a.num, a.den); }
Q div(Q a, Q b) { return make_q(a.num * b.den, a.den * b.num); }
int cmp(Q a, Q b) {
  const i128 l = a.num * b.den;
  const i128 r = b.num * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}
i128 floor_div(i128 a, i128 b) {
  i128 d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

// Line q x - p y = c in the plane cover.
struct Line {
  std::int64_t p, q;
  Q c;
};

// Every lift of a closed curve of slope p/q: q x - p y = s*c0 + 2m, s = +-1.
// Only lines meeting the box [xmin,xmax] x [0,ymax] are returned.
std::vector<Line> lifted_lines(const Slope& s, Q c0, std::int64_t xmin, std::int64_t xmax,
                               std::int64_t ymax) {
  const std::int64_t p = s.p();
  const std::int64_t q = s.q();
  i128 lo = 0;
  i128 hi = 0;
  for (std::int64_t cx : {xmin, xmax}) {
    for (std::int64_t cy : {std::int64_t{0}, ymax}) {
      const i128 v = static_cast<i128>(q) * cx - static_cast<i128>(p) * cy;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  std::vector<Line> lines;
  for (int sign : {1, -1}) {
    const Q base = mul(sign, c0);
    // need lo <= base + 2m <= hi
    const i128 m_lo = floor_div(lo * base.den - base.num, 2 * base.den) - 1;
    const i128 m_hi = floor_div(hi * base.den - base.num, 2 * base.den) + 1;
    for (i128 m = m_lo; m <= m_hi; ++m) {
      const Q c = add(base, make_q(2 * m, 1));
      if (cmp(c, make_q(lo, 1)) >= 0 && cmp(c, make_q(hi, 1)) <= 0) lines.push_back({p, q, c});
    }
  }
  return lines;
}

// Intersection of two non-parallel lines.
std::pair<Q, Q> meet(const Line& a, const Line& b) {
  const i128 det = static_cast<i128>(a.p) * b.q - static_cast<i128>(a.q) * b.p;
  const Q x = div(sub(mul(a.p, b.c), mul(b.p, a.c)), make_q(det, 1));
  const Q y = div(sub(mul(a.q, b.c), mul(b.q, a.c)), make_q(det, 1));
  return {x, y};
}

CoverPoint to_point(Q x, Q y) {
  return {x.num * y.den, y.num * x.den, x.den * y.den};
}

// Clip a line to the rectangle [0,2] x [0,1] (closed, for drawing only).
std::optional<CoverSegment> clip(const Line& l) {
  std::vector<std::pair<Q, Q>> hits;
  auto keep = [&](Q x, Q y) {
    if (cmp(x, make_q(0, 1)) >= 0 && cmp(x, make_q(2, 1)) <= 0 && cmp(y, make_q(0, 1)) >= 0 &&
        cmp(y, make_q(1, 1)) <= 0) {
      hits.emplace_back(x, y);
    }
  };
  if (l.p != 0) {
    for (int y0 : {0, 1}) {
      // q x = c + p y0
      if (l.q == 0) break;
      const Q x = div(add(l.c, make_q(static_cast<i128>(l.p) * y0, 1)), make_q(l.q, 1));
      keep(x, make_q(y0, 1));
    }
  }
  if (l.q != 0) {
    for (int x0 : {0, 2}) {
      if (l.p == 0) break;
      // p y = q x0 - c
      const Q y = div(sub(make_q(static_cast<i128>(l.q) * x0, 1), l.c), make_q(l.p, 1));
      keep(make_q(x0, 1), y);
    }
  }
  if (l.p == 0) {  // vertical line x = c/q
    const Q x = div(l.c, make_q(l.q, 1));
    keep(x, make_q(0, 1));
    keep(x, make_q(1, 1));
  }
  if (l.q == 0) {  // horizontal line y = -c/p
    const Q y = div(mul(-1, l.c), make_q(l.p, 1));
    keep(make_q(0, 1), y);
    keep(make_q(2, 1), y);
  }
  if (hits.size() < 2) return std::nullopt;
  return CoverSegment{to_point(hits.front().first, hits.front().second),
                      to_point(hits.back().first, hits.back().second)};
}

void check_cap(const Slope& s, std::int64_t cap) {
  if (std::llabs(s.p()) > cap || s.q() > cap) {
    throw Error(ErrorKind::OracleCapExceeded,
                "slope " + s.str() + " exceeds oracle cap " + std::to_string(cap));
  }
}

// Generic offsets: their denominators are primes larger than any capped
// coordinate, so no intersection lands on a lattice line.
constexpr Q kOffsetFirst{37, 101};
constexpr Q kOffsetSecond{59, 113};

}  // namespace

FramedCurve curve_coordinates_raw(std::int64_t p, std::int64_t q) {
  if (q < 0 || (p == 0 && q == 0)) {
    throw Error(ErrorKind::PreconditionViolation, "curve needs q >= 0 and (p, q) != (0, 0)");
  }
  const std::int64_t a = std::llabs(p);
  const std::int64_t m = std::min(a, q);
  FramedCurve c{Slope(p == 0 ? 0 : (p > 0 ? 1 : -1), 1), {q, q, a, a}, {}, {}};
  if (q == 0) c.slope = Slope::infinity();
  if (q != 0 && p != 0) c.slope = Slope(p, q);

  auto b = [](std::int64_t i) { return Tick{Side::D1, static_cast<int>(i)}; };
  auto t = [](std::int64_t i) { return Tick{Side::D2, static_cast<int>(i)}; };
  auto l = [](std::int64_t i) { return Tick{Side::A, static_cast<int>(i)}; };
  auto r = [](std::int64_t i) { return Tick{Side::APrime, static_cast<int>(i)}; };

  // Front square: lines running up and to the right.
  for (std::int64_t j = 0; j < m; ++j) c.front.push_back({b(q - 1 - j), r(j)});
  for (std::int64_t j = 0; j < m; ++j) c.front.push_back({t(j), l(a - 1 - j)});
  for (std::int64_t i = 0; i + a < q; ++i) c.front.push_back({b(i), t(i + a)});
  for (std::int64_t j = 0; j + q < a; ++j) c.front.push_back({l(j), r(j + q)});
  // Back square, seen from the front: lines running up and to the left.
  for (std::int64_t j = 0; j < m; ++j) c.back.push_back({b(j), l(j)});
  for (std::int64_t j = 0; j < m; ++j) c.back.push_back({t(q - 1 - j), r(a - 1 - j)});
  for (std::int64_t i = a; i < q; ++i) c.back.push_back({b(i), t(i - a)});
  for (std::int64_t j = 0; j + q < a; ++j) c.back.push_back({r(j), l(j + q)});

  if (p < 0) {
    auto reflect = [q](Tick& k) {
      switch (k.side) {
        case Side::D1:
        case Side::D2: k.index = static_cast<int>(q) - 1 - k.index; break;
        case Side::A: k.side = Side::APrime; break;
        case Side::APrime: k.side = Side::A; break;
      }
    };
    for (auto* arcs : {&c.front, &c.back}) {
      for (auto& arc : *arcs) {
        reflect(arc.a);
        reflect(arc.b);
      }
    }
  }
  return c;
}

FramedCurve curve_coordinates(const Slope& s) { return curve_coordinates_raw(s.p(), s.q()); }

TraceResult trace_curve(const FramedCurve& curve) {
  const auto [nb, nt, nl, nr] = curve.tick_counts;
  (void)nt;
  const std::int64_t total = 2 * nb + 2 * nl;
  // Position of a tick on the boundary circle of a square.
  auto pos = [&](const Tick& k) -> std::int64_t {
    switch (k.side) {
      case Side::D1: return k.index;
      case Side::APrime: return nb + k.index;
      case Side::D2: return nb + nr + (nb - 1 - k.index);
      case Side::A: return 2 * nb + nr + (nl - 1 - k.index);
    }
    return 0;
  };

  TraceResult result;
  std::vector<std::int64_t> front_mate(total, -1), back_mate(total, -1);
  for (auto [arcs, mate] : {std::pair{&curve.front, &front_mate}, std::pair{&curve.back, &back_mate}}) {
    for (const auto& arc : *arcs) {
      const auto u = pos(arc.a);
      const auto v = pos(arc.b);
      if ((*mate)[u] != -1 || (*mate)[v] != -1) result.simple = false;
      (*mate)[u] = v;
      (*mate)[v] = u;
    }
    for (std::size_t i = 0; i < arcs->size(); ++i) {
      auto [a1, b1] = std::minmax(pos((*arcs)[i].a), pos((*arcs)[i].b));
      for (std::size_t j = i + 1; j < arcs->size(); ++j) {
        const auto x = pos((*arcs)[j].a);
        const auto y = pos((*arcs)[j].b);
        const bool x_in = a1 < x && x < b1;
        const bool y_in = a1 < y && y < b1;
        if (x_in != y_in) result.simple = false;
      }
    }
  }
  if (std::find(front_mate.begin(), front_mate.end(), -1) != front_mate.end() ||
      std::find(back_mate.begin(), back_mate.end(), -1) != back_mate.end()) {
    result.simple = false;
    return result;
  }
  std::vector<bool> seen(total, false);
  for (std::int64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++result.loops;
    std::int64_t cur = start;
    do {
      seen[cur] = true;
      const auto other = front_mate[cur];
      seen[other] = true;
      cur = back_mate[other];
    } while (cur != start);
  }
  return result;
}

std::int64_t curve_curve_intersection(const Slope& s1, const Slope& s2) {
  return 2 * std::llabs(s1.p() * s2.q() - s2.p() * s1.q());
}

std::int64_t arc_curve_intersection(const Slope& arc, const Slope& curve) {
  return std::llabs(arc.p() * curve.q() - arc.q() * curve.p());
}

LatticeTrace lattice_trace(const Slope& s1, const Slope& s2, IntersectionMode mode, std::int64_t cap) {
  check_cap(s1, cap);
  check_cap(s2, cap);
  LatticeTrace trace;
  const bool parallel = s1 == s2;

  if (mode == IntersectionMode::CurveCurve) {
    const auto lines1 = lifted_lines(s1, kOffsetFirst, 0, 2, 1);
    const auto lines2 = lifted_lines(s2, kOffsetSecond, 0, 2, 1);
    for (const auto& l : lines1)
      if (auto seg = clip(l)) trace.first.push_back(*seg);
    for (const auto& l : lines2)
      if (auto seg = clip(l)) trace.second.push_back(*seg);
    if (parallel) return trace;
    const Q zero = make_q(0, 1);
    for (const auto& a : lines1) {
      for (const auto& b : lines2) {
        const auto [x, y] = meet(a, b);
        if (cmp(x, zero) == 0 || cmp(x, make_q(2, 1)) == 0 || cmp(y, zero) == 0 ||
            cmp(y, make_q(1, 1)) == 0) {
          throw std::logic_error("lattice oracle hit the domain boundary");
        }
        if (cmp(x, zero) > 0 && cmp(x, make_q(2, 1)) < 0 && cmp(y, zero) > 0 && cmp(y, make_q(1, 1)) < 0) {
          ++trace.crossings;
        }
      }
    }
    return trace;
  }

  // Arc mode: the arc lifts to the open segment from the origin to (p, q).
  const Slope& arc = s1;
  trace.first.push_back({{0, 0, 1}, {arc.p(), arc.q(), 1}});
  const std::int64_t xmin = std::min<std::int64_t>(0, arc.p());
  const std::int64_t xmax = std::max<std::int64_t>(0, arc.p());
  const std::int64_t ymax = arc.q();
  const std::vector<Line> lines = lifted_lines(s2, kOffsetSecond, xmin, xmax, ymax);
  if (parallel) return trace;
  const Line arc_line{arc.p(), arc.q(), make_q(0, 1)};
  for (const auto& l : lines) {
    const i128 det = static_cast<i128>(arc.p()) * l.q - static_cast<i128>(arc.q()) * l.p;
    if (det == 0) continue;
    const auto [x, y] = meet(arc_line, l);
    // parameter t along the segment, via whichever coordinate moves
    const Q t = arc.p() != 0 ? div(x, make_q(arc.p(), 1)) : div(y, make_q(arc.q(), 1));
    if (cmp(t, make_q(0, 1)) > 0 && cmp(t, make_q(1, 1)) < 0) {
      ++trace.crossings;
      trace.second.push_back({to_point(x, y), to_point(x, y)});
    }
  }
  return trace;
}

std::int64_t brute_force_intersection(const Slope& s1, const Slope& s2, IntersectionMode mode,
                                      std::int64_t cap) {
  return lattice_trace(s1, s2, mode, cap).crossings;
}

Slope dehn_twist(const Slope& s, const Slope& about, std::int64_t count) {
  if (!about.is_infinite()) {
    throw Error(ErrorKind::UnsupportedTwistCurve, "only twists about 1/0 are supported, got " + about.str());
  }
  if (s.is_infinite()) return s;
  std::int64_t shift = 0;
  std::int64_t p = 0;
  if (__builtin_mul_overflow(count, s.q(), &shift) || __builtin_add_overflow(s.p(), shift, &p)) {
    throw Error(ErrorKind::Overflow, "twisted slope exceeds 64 bits");
  }
  return Slope(p, s.q());
}

std::string render_curve_svg(const FramedCurve& curve) {
  const auto [nb, nt, nl, nr] = curve.tick_counts;
  (void)nt;
  (void)nr;
  constexpr double kSide = 200.0;
  constexpr double kPad = 20.0;
  auto where = [&](const Tick& k, double x0) -> std::pair<double, double> {
    const double frac_d = (k.index + 1.0) / (static_cast<double>(nb) + 1.0);
    const double frac_a = (k.index + 1.0) / (static_cast<double>(nl) + 1.0);
    switch (k.side) {
      case Side::D1: return {x0 + frac_d * kSide, kPad + kSide};
      case Side::D2: return {x0 + frac_d * kSide, kPad};
      case Side::A: return {x0, kPad + kSide - frac_a * kSide};
      case Side::APrime: return {x0 + kSide, kPad + kSide - frac_a * kSide};
    }
    return {x0, kPad};
  };
  std::ostringstream out;
  char buf[160];
  const double width = 3 * kPad + 2 * kSide;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" height=\"%.0f\">\n",
                width, 2 * kPad + kSide);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" << buf;
  out << "<title>curve " << curve.slope.str() << "</title>\n";
  const double origins[2] = {kPad, 2 * kPad + kSide};
  for (int sq = 0; sq < 2; ++sq) {
    const double x0 = origins[sq];
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" stroke=\"#999\"/>\n",
                  x0, kPad, kSide, kSide);
    out << buf;
    for (double cx : {x0, x0 + kSide}) {
      for (double cy : {kPad, kPad + kSide}) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"black\"/>\n", cx, cy);
        out << buf;
      }
    }
    out << "<g class=\"" << (sq == 0 ? "front" : "back") << "\" stroke=\"#c03\" fill=\"none\">\n";
    for (const auto& arc : sq == 0 ? curve.front : curve.back) {
      const auto [x1, y1] = where(arc.a, x0);
      const auto [x2, y2] = where(arc.b, x0);
      std::snprintf(buf, sizeof buf, "<polyline points=\"%.2f,%.2f %.2f,%.2f\"/>\n", x1, y1, x2, y2);
      out << buf;
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace coil
