#include "coil/verify.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include "coil/bounds.hpp"
#include "coil/curves.hpp"
#include "coil/error.hpp"
#include "coil/generators.hpp"
#include "coil/svg.hpp"

namespace coil {

namespace {

using Check = std::function<CheckResult()>;

template <class F>
void for_coprime(std::int64_t max_q, F f) {
  for (std::int64_t q = 2; q <= max_q; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) f(p, q);
    }
  }
}

CheckResult counted(std::string name, std::int64_t bad, std::int64_t total, std::string first) {
  CheckResult r{std::move(name), bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " ok"};
  if (bad) r.detail += "; first failure " + first;
  return r;
}

CheckResult cfrac_round_trip() {
  std::int64_t bad = 0, total = 0;
  std::string first;
  for_coprime(200, [&](std::int64_t p, std::int64_t q) {
    ++total;
    const Slope s(p, q);
    if (!(cfrac_eval(cfrac_expand(s)) == s) && bad++ == 0) first = s.str();
  });
  return counted("cfrac round trip, q <= 200", bad, total, first);
}

CheckResult mirror_involution() {
  std::int64_t bad = 0, total = 0;
  std::string first;
  for_coprime(200, [&](std::int64_t p, std::int64_t q) {
    ++total;
    const Slope s(p, q);
    if (!(mirror_slope(mirror_slope(s)) == s) && bad++ == 0) first = s.str();
  });
  return counted("mirror involution, q <= 200", bad, total, first);
}

CheckResult intersection_oracle(std::int64_t cap) {
  std::vector<Slope> slopes{Slope::infinity()};
  for (std::int64_t q = 1; q <= cap; ++q) {
    for (std::int64_t p = -cap; p <= cap; ++p) {
      if (std::gcd(std::llabs(p), q) == 1) slopes.emplace_back(p, q);
    }
  }
  std::int64_t bad = 0, total = 0;
  std::string first;
  for (const auto& a : slopes) {
    for (const auto& b : slopes) {
      total += 2;
      if (brute_force_intersection(a, b, IntersectionMode::CurveCurve, cap) != curve_curve_intersection(a, b) &&
          bad++ == 0)
        first = "curve " + a.str() + " " + b.str();
      if (brute_force_intersection(a, b, IntersectionMode::ArcCurve, cap) != arc_curve_intersection(a, b) &&
          bad++ == 0)
        first = "arc " + a.str() + " " + b.str();
    }
  }
  return counted("intersection oracle, |p|, q <= " + std::to_string(cap), bad, total, first);
}

CheckResult curve_realization() {
  std::int64_t bad = 0, total = 0;
  std::string first;
  for_coprime(60, [&](std::int64_t p, std::int64_t q) {
    for (std::int64_t sign : {1, -1}) {
      ++total;
      const Slope s(sign * p, q);
      const TraceResult t = trace_curve(curve_coordinates(s));
      if (!(t.loops == 1 && t.simple) && bad++ == 0) first = s.str();
    }
  });
  return counted("curve realization is one simple loop, q <= 60", bad, total, first);
}

// A leading term of 1 merges with the next twist region once the plat is
// closed, so the diagram has k - 1 regions then.
CheckResult two_bridge_diagrams() {
  std::int64_t bad = 0, total = 0;
  std::string first;
  for_coprime(60, [&](std::int64_t p, std::int64_t q) {
    ++total;
    const ContinuedFraction c = cfrac_expand(Slope(p, q));
    const PlanarDiagram d = gen_two_bridge(c);
    const std::size_t expect = c.length() - (c.terms().front() == 1 ? 1 : 0);
    const bool ok = is_alternating(d) && satisfies_euler(d) &&
                    static_cast<std::int64_t>(d.crossing_count()) == c.crossing_sum() &&
                    twist_regions(d).count() == expect && d.component_count() == (q % 2 ? 1 : 2);
    if (!ok && bad++ == 0) first = c.str();
  });
  return counted("two-bridge diagrams, q <= 60", bad, total, first);
}

CheckResult fill_consistency() {
  std::int64_t bad = 0, total = 0;
  std::string first;
  for_coprime(6, [&](std::int64_t p, std::int64_t q) {
    const PlanarDiagram aug = gen_augmented(Slope(p, q));
    for (std::int64_t n1 : {-2, -1, 1, 2}) {
      for (std::int64_t n2 : {-2, -1, 1, 2}) {
        ++total;
        const CoilSpec spec{p, q, n1, n2};
        const PlanarDiagram f1 = fill_crossing_circle(aug, aug.provenance().circles[0].component, n1);
        const PlanarDiagram f2 = fill_crossing_circle(f1, f1.provenance().circles[0].component, n2);
        const PlanarDiagram direct = gen_double_coil(spec);
        const bool ok = f2.component_count() == 1 && canonical_signature(f2) == canonical_signature(direct) &&
                        static_cast<std::int64_t>(f2.crossing_count()) == spec.crossing_count();
        if (!ok && bad++ == 0) first = spec.str();
      }
    }
  });
  return counted("filled augmented link equals double coil, q <= 6", bad, total, first);
}

CheckResult pd_round_trips() {
  std::int64_t bad = 0, total = 0;
  std::string first;
  auto check = [&](const PlanarDiagram& d, const std::string& label) {
    ++total;
    if (d.free_loops() != 0) return;
    const PlanarDiagram back = parse_pd(emit_pd(d));
    if (!(canonical_signature(back) == canonical_signature(d)) && bad++ == 0) first = label;
  };
  for_coprime(9, [&](std::int64_t p, std::int64_t q) {
    const Slope s(p, q);
    check(gen_two_bridge(cfrac_expand(s)), "two-bridge " + s.str());
    check(gen_clasped_two_bridge(s), "clasped " + s.str());
    check(gen_augmented(s), "augmented " + s.str());
    if (q <= 5) check(gen_double_coil({p, q, 1, -2}), "coil " + s.str());
  });
  return counted("PD round trip of generated diagrams", bad, total, first);
}

CheckResult threshold_sharpness() {
  std::int64_t bad = 0, total = 0;
  std::string first;
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::int64_t k = 1; k <= 200; ++k) {
    for (std::int64_t n = 1; k * n <= 200; ++n) {
      ++total;
      if ((cusp_slope_length_lower(k, n) > two_pi) != (k * n >= 80) && bad++ == 0)
        first = "k=" + std::to_string(k) + " n=" + std::to_string(n);
    }
  }
  for (std::int64_t n = -50; n <= 50; ++n) {
    total += 2;
    if ((slope_length_lower(n) > two_pi) != (std::llabs(n) >= 4) && bad++ == 0) first = "n=" + std::to_string(n);
    if (disk_obstruction_check(n) != (std::llabs(n) >= 6) && bad++ == 0) first = "disk n=" + std::to_string(n);
  }
  return counted("bound thresholds", bad, total, first);
}

CheckResult interval_sanity() {
  std::int64_t bad = 0, total = 0;
  std::string first;
  for_coprime(30, [&](std::int64_t p, std::int64_t q) {
    const VolumeInterval parent = parent_volume_interval(Slope(p, q));
    for (std::int64_t n1 = -8; n1 <= 8; ++n1) {
      for (std::int64_t n2 = -8; n2 <= 8; ++n2) {
        if (n1 == 0 || n2 == 0) continue;
        const CoilSpec spec{p, q, n1, n2};
        const auto k = static_cast<std::int64_t>(cfrac_expand(spec.slope()).length());
        if (coil_hyperbolicity_certificate(k, n1, n2).condition == HyperbolicityCondition::None) continue;
        ++total;
        const VolumeInterval v = coil_volume_interval(spec);
        const SpectralInterval l = coil_lambda_interval(spec);
        const bool ok = v.lower >= 0 && v.lower <= v.upper && l.lower <= l.upper && v.upper == parent.upper &&
                        v.lower <= parent.lower;
        if (!ok && bad++ == 0) first = spec.str();
      }
    }
  });
  return counted("volume and spectral intervals, q <= 30", bad, total, first);
}

CheckResult composition_identity() {
  std::int64_t bad = 0, total = 0;
  std::string first;
  for (std::int64_t g = 1; g <= 10; ++g) {
    for (int i = 0; i <= 30; ++i) {
      ++total;
      const double vol = std::pow(10.0, 3.0 * i / 30.0);
      const double a = lambda_upper(g, vol);
      const double b = buser_upper(cheeger_upper(g, vol));
      if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), 1e-300) && a != b && bad++ == 0)
        first = "g=" + std::to_string(g);
    }
  }
  return counted("Buser after Cheeger equals lambda_upper", bad, total, first);
}

}  // namespace

std::vector<CheckResult> verify_suite(const VerifyOptions& opts) {
  const std::int64_t cap = opts.oracle_cap;
  const std::vector<Check> checks{
      cfrac_round_trip,     mirror_involution,   [cap] { return intersection_oracle(cap); },
      curve_realization,    two_bridge_diagrams, fill_consistency,
      pd_round_trips,       threshold_sharpness, interval_sanity,
      composition_identity,
  };
  std::vector<CheckResult> out(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      try {
        out[i] = checks[i]();
      } catch (const std::exception& e) {
        out[i] = {"check " + std::to_string(i), false, std::string("threw: ") + e.what()};
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(checks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::vector<CheckResult> verify_diagram(const PlanarDiagram& d) {
  std::vector<CheckResult> out;
  out.push_back({"euler characteristic", satisfies_euler(d),
                 std::to_string(d.crossing_count()) + " crossings, " + std::to_string(faces(d).size()) + " faces"});
  if (d.free_loops() == 0) {
    bool same = false;
    try {
      same = canonical_signature(parse_pd(emit_pd(d))) == canonical_signature(d);
    } catch (const Error&) {
      same = false;
    }
    out.push_back({"PD round trip", same, ""});
  } else {
    out.push_back({"PD round trip", true, "skipped: crossingless components are not representable"});
  }
  const auto tr = twist_regions(d);
  std::vector<int> seen(d.crossing_count(), 0);
  for (const auto& region : tr.regions) {
    for (int x : region) ++seen[x];
  }
  const bool partition = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  out.push_back({"twist regions partition the crossings", partition, std::to_string(tr.count()) + " regions"});
  const std::string svg = render_svg(d);
  std::size_t glyphs = 0;
  for (std::size_t at = svg.find("class=\"crossing\""); at != std::string::npos;
       at = svg.find("class=\"crossing\"", at + 1))
    ++glyphs;
  out.push_back({"SVG has one glyph per crossing", glyphs == d.crossing_count(), std::to_string(glyphs) + " glyphs"});
  return out;
}

}  // namespace coil
