#include "coil/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "builder.hpp"
#include "coil/curves.hpp"
#include "coil/error.hpp"

namespace coil {

namespace {

using detail::Builder;
using detail::Positions;

// Braid exponent laid into box 0 (D1) or box 1 (D2) for n full twists.
// The boxes face opposite ways in the projection, so equal twist counts
// take opposite generators; this makes (1,2,1,1) the figure-8 knot.
std::int64_t oriented(std::int64_t n, int box) { return box == 0 ? n : -n; }

void top_cap(Builder& b, Positions& pos, std::size_t i) {
  const int u = b.new_endpoint();
  const int v = b.new_endpoint();
  b.set_partner(u, v);
  pos[i] = u;
  pos[i + 1] = v;
}

// Bottom closure of the 4-plat. The strands of the last twisted pair must
// end on different caps, otherwise its crossings would be nugatory.
void plat_closure(Builder& b, const Positions& pos, std::size_t last_pair) {
  if (last_pair == 1) {
    b.link(pos[0], pos[1]);
    b.link(pos[2], pos[3]);
  } else {
    b.link(pos[1], pos[2]);
    b.link(pos[0], pos[3]);
  }
}

// Twist blocks of the standard alternating 4-plat: odd-numbered terms on
// the middle pair, even-numbered on the left pair, with opposite signs.
std::size_t plat_blocks(Builder& b, Positions& pos, const ContinuedFraction& c) {
  top_cap(b, pos, 0);
  top_cap(b, pos, 2);
  std::size_t pair = 1;
  for (std::size_t j = 0; j < c.length(); ++j) {
    pair = j % 2 == 0 ? 1 : 0;
    for (std::int64_t t = 0; t < c.terms()[j]; ++t) braid_generator(b, pos, pair, j % 2 == 0);
  }
  return pair;
}

int circle_component(const Builder::Result& r, const CircleRecord& rec) {
  // The ring runs through geometric slots 1 and 3 of every row crossing.
  return r.diagram.edges()[r.edge_at_geometric(rec.up_row.front(), 1)].component;
}

CircleRecord remap(const Builder::Result& r, CircleRecord rec) {
  rec.component = circle_component(r, rec);
  for (auto* row : {&rec.up_row, &rec.down_row}) {
    for (int& x : *row) x = r.crossing_map[x];
  }
  return rec;
}

// Endpoints where the planar curve meets D1 and D2, on both squares.
struct CurveEnds {
  Positions front_d1, back_d1, front_d2, back_d2;
};

CurveEnds lay_curve(Builder& b, const FramedCurve& curve) {
  std::map<std::pair<int, int>, int> front, back;
  auto key = [](const Tick& t) { return std::pair{static_cast<int>(t.side), t.index}; };
  auto endpoint = [&](std::map<std::pair<int, int>, int>& m, const Tick& t) {
    auto [it, fresh] = m.try_emplace(key(t), -1);
    if (fresh) it->second = b.new_endpoint();
    return it->second;
  };
  for (const auto& arc : curve.front) b.set_partner(endpoint(front, arc.a), endpoint(front, arc.b));
  for (const auto& arc : curve.back) b.set_partner(endpoint(back, arc.a), endpoint(back, arc.b));
  for (Side side : {Side::A, Side::APrime}) {
    for (std::int64_t i = 0; i < curve.tick_counts[static_cast<int>(side)]; ++i) {
      const Tick t{side, static_cast<int>(i)};
      b.link(endpoint(front, t), endpoint(back, t));
    }
  }
  CurveEnds ends;
  for (std::int64_t i = 0; i < curve.tick_counts[0]; ++i) {
    ends.front_d1.push_back(endpoint(front, {Side::D1, static_cast<int>(i)}));
    ends.back_d1.push_back(endpoint(back, {Side::D1, static_cast<int>(i)}));
    ends.front_d2.push_back(endpoint(front, {Side::D2, static_cast<int>(i)}));
    ends.back_d2.push_back(endpoint(back, {Side::D2, static_cast<int>(i)}));
  }
  return ends;
}

void link_all(Builder& b, const Positions& from, const Positions& to) {
  for (std::size_t i = 0; i < from.size(); ++i) b.link(from[i], to[i]);
}

}  // namespace

void CoilSpec::validate() const {
  if (q < 2 || p <= 0 || p >= q) {
    throw Error(ErrorKind::PreconditionViolation, "double coil needs 0 < p < q and q >= 2, got " + str());
  }
  if (n1 == 0 || n2 == 0) {
    throw Error(ErrorKind::PreconditionViolation, "double coil twist counts must be non-zero");
  }
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::NotAKnot, "(" + std::to_string(p) + "," + std::to_string(q) +
                                         ") is not coprime; the coil has several components");
  }
}

std::int64_t CoilSpec::crossing_count() const {
  return q * (q - 1) * (std::llabs(n1) + std::llabs(n2));
}

std::string CoilSpec::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n1) + "," +
         std::to_string(n2) + ")";
}

PlanarDiagram gen_two_bridge(const ContinuedFraction& c) {
  Builder b;
  Positions pos(4);
  const std::size_t last = plat_blocks(b, pos, c);
  plat_closure(b, pos, last);
  Provenance prov;
  prov.family = DiagramFamily::TwoBridge;
  prov.cfrac = c;
  prov.slope = cfrac_eval(c);
  return b.finish(std::move(prov)).diagram;
}

PlanarDiagram gen_clasped_two_bridge(const Slope& s) {
  require_unit_interval(s, "gen_clasped_two_bridge");
  const ContinuedFraction c = cfrac_expand(s);
  Builder b;
  Positions pos(4);
  const std::size_t last = plat_blocks(b, pos, c);
  const std::size_t ring_pair = last == 1 ? 0 : 1;
  CircleRecord clasp = crossing_ring(b, pos, ring_pair, 2, "clasp");
  plat_closure(b, pos, ring_pair);
  Provenance prov;
  prov.family = DiagramFamily::ClaspedTwoBridge;
  prov.cfrac = c;
  prov.slope = s;
  auto r = b.finish(prov);
  prov.circles.push_back(remap(r, clasp));
  return with_provenance(r.diagram, std::move(prov));
}

PlanarDiagram gen_double_coil(const CoilSpec& spec) {
  spec.validate();
  Builder b;
  const CurveEnds ends = lay_curve(b, curve_coordinates(spec.slope()));
  Positions pos = ends.front_d1;
  detail::full_twists(b, pos, oriented(spec.n1, 0));
  link_all(b, pos, ends.back_d1);
  pos = ends.back_d2;
  detail::full_twists(b, pos, oriented(spec.n2, 1));
  link_all(b, pos, ends.front_d2);
  Provenance prov;
  prov.family = DiagramFamily::DoubleCoil;
  prov.slope = spec.slope();
  prov.cfrac = cfrac_expand(spec.slope());
  prov.twists = {spec.n1, spec.n2};
  return b.finish(std::move(prov)).diagram;
}

PlanarDiagram gen_augmented(const Slope& s) {
  require_unit_interval(s, "gen_augmented");
  Builder b;
  const CurveEnds ends = lay_curve(b, curve_coordinates(s));
  const std::size_t q = ends.front_d1.size();
  Positions pos = ends.front_d1;
  CircleRecord c1 = crossing_ring(b, pos, 0, q, "C1");
  link_all(b, pos, ends.back_d1);
  pos = ends.back_d2;
  CircleRecord c2 = crossing_ring(b, pos, 0, q, "C2");
  link_all(b, pos, ends.front_d2);
  Provenance prov;
  prov.family = DiagramFamily::Augmented;
  prov.slope = s;
  prov.cfrac = cfrac_expand(s);
  auto r = b.finish(prov);
  prov.circles = {remap(r, c1), remap(r, c2)};
  return with_provenance(r.diagram, std::move(prov));
}

PlanarDiagram fill_crossing_circle(const PlanarDiagram& d, int circle_component, std::int64_t n) {
  const auto& circles = d.provenance().circles;
  const auto found = std::find_if(circles.begin(), circles.end(),
                                  [&](const CircleRecord& c) { return c.component == circle_component; });
  if (found == circles.end()) {
    throw Error(ErrorKind::NotACrossingCircle,
                "component " + std::to_string(circle_component) + " is not a recorded crossing circle");
  }
  const CircleRecord rec = *found;
  auto on_circle = [&](int x, int s) { return d.edges()[d.edge_at({x, s})].component == rec.component; };

  Builder b = detail::builder_from(d);
  const std::size_t q = rec.up_row.size();
  std::vector<int> above(q), below(q);
  for (std::size_t i = 0; i < q; ++i) {
    const int x = rec.up_row[i];
    const int y = rec.down_row[i];
    for (int s = 0; s < 4; ++s) {
      if (on_circle(x, s)) continue;
      if (d.opposite({x, s}).crossing != y) above[i] = s;
    }
    for (int s = 0; s < 4; ++s) {
      if (on_circle(y, s)) continue;
      if (d.opposite({y, s}).crossing != x) below[i] = s;
    }
  }
  for (std::size_t i = 0; i < q; ++i) {
    b.kill_crossing(rec.up_row[i]);
    b.kill_crossing(rec.down_row[i]);
  }
  Positions pos(q);
  for (std::size_t i = 0; i < q; ++i) pos[i] = b.open_relay(b.slot(rec.up_row[i], above[i]));
  detail::full_twists(b, pos, oriented(n, rec.name == "C2" ? 1 : 0));
  for (std::size_t i = 0; i < q; ++i) b.link(pos[i], b.open_relay(b.slot(rec.down_row[i], below[i])));

  Provenance prov = d.provenance();
  prov.circles.clear();
  if (rec.name == "C1") prov.twists[0] = n;
  if (rec.name == "C2") prov.twists[1] = n;
  if (prov.family == DiagramFamily::Augmented) prov.family = DiagramFamily::FilledAugmented;
  if (prov.family == DiagramFamily::ClaspedTwoBridge) prov.family = DiagramFamily::None;

  auto r = b.finish(prov);
  for (const auto& other : circles) {
    if (other.component == rec.component) continue;
    CircleRecord moved = other;
    // Locate the ring through its first crossing, which survives the fill.
    int ring_slot = 0;
    while (!(d.edges()[d.edge_at({other.up_row.front(), ring_slot})].component == other.component)) ++ring_slot;
    moved.component = r.diagram.edges()[r.edge_at_geometric(other.up_row.front(), ring_slot)].component;
    for (auto* row : {&moved.up_row, &moved.down_row}) {
      for (int& x : *row) x = r.crossing_map[x];
    }
    prov.circles.push_back(std::move(moved));
  }
  return with_provenance(r.diagram, std::move(prov));
}

GeneralizedTwistCount generalized_twist_regions(const PlanarDiagram& d) {
  const auto& prov = d.provenance();
  const bool coil = prov.family == DiagramFamily::DoubleCoil ||
                    (prov.family == DiagramFamily::FilledAugmented && prov.circles.empty());
  if (coil && prov.twists[0] && prov.twists[1]) {
    std::size_t boxes = 0;
    for (const auto& t : prov.twists) boxes += *t != 0 ? 1 : 0;
    return {boxes, true};
  }
  if (prov.family == DiagramFamily::TwoBridge && prov.cfrac) return {prov.cfrac->length(), true};
  return {twist_regions(d).count(), false};
}

}  // namespace coil
