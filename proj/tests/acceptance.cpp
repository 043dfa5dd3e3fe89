// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "coil/bounds.hpp"
#include "coil/curves.hpp"
#include "coil/diagram.hpp"
#include "coil/error.hpp"
#include "coil/family.hpp"
#include "coil/generators.hpp"
#include "coil/slope.hpp"

using namespace coil;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

template <class F>
void for_coprime(std::int64_t max_q, F&& f) {
  for (std::int64_t q = 2; q <= max_q; ++q)
    for (std::int64_t p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) f(p, q);
}

double series_v3() {
  long double sum = 0;
  for (long k = 200000; k >= 0; --k) {
    const long double a = 3.0L * k + 1, b = 3.0L * k + 2;
    sum += 1 / (a * a) - 1 / (b * b);
  }
  return static_cast<double>(3 * std::sqrt(3.0L) / 4 * sum);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome constants_at_64_25() {
  const double v3 = series_v3();
  const double r = 2 * std::numbers::pi / std::sqrt(64.25);
  const double f = std::pow(1 - r * r, 1.5);
  const double slope = f * 4 * v3, offset = f * 1.3536;
  const VolumeInterval iv = coil_volume_interval({3, 5, 4, 4});
  const double lib_slope = dehn_filling_factor(std::sqrt(ell_param(3, 4, 4))) * 4 * constants::v3;
  const bool ok = std::abs(slope - 0.9718) < 2e-4 && std::abs(offset - 0.3241) < 2e-4 &&
                  std::abs(lib_slope - slope) < 1e-9 && std::abs(iv.lower - (3 * slope - offset)) < 1e-9 &&
                  ell_param(3, 4, 4) == 64.25;
  return {ok, fmt("coefficients %.6f k - %.6f", slope, offset)};
}

Outcome cfrac_round_trip() {
  std::int64_t total = 0, bad = 0;
  for_coprime(500, [&](std::int64_t p, std::int64_t q) {
    ++total;
    const ContinuedFraction c = cfrac_expand(Slope(p, q));
    if (!(cfrac_eval(c) == Slope(p, q)) || !(ContinuedFraction::parse(c.str()) == c)) ++bad;
  });
  return {bad == 0, fmt("%lld pairs, %lld mismatches", (long long)total, (long long)bad)};
}

Outcome twist_region_count() {
  std::int64_t total = 0, wrong_t = 0, wrong_other = 0, lead_one = 0;
  std::string first;
  for_coprime(100, [&](std::int64_t p, std::int64_t q) {
    ++total;
    const ContinuedFraction c = cfrac_expand(Slope(p, q));
    const PlanarDiagram d = gen_two_bridge(c);
    std::int64_t sum = 0;
    for (auto a : c.terms()) sum += a;
    if (static_cast<std::int64_t>(d.crossing_count()) != sum || !is_alternating(d)) ++wrong_other;
    if (twist_regions(d).count() != c.length()) {
      if (wrong_t++ == 0) first = Slope(p, q).str();
      if (c.terms().front() == 1) ++lead_one;
    }
  });
  return {wrong_t == 0 && wrong_other == 0,
          fmt("%lld slopes; crossing/alternating mismatches %lld; t(D) != k for %lld (first %s, %lld of them with "
              "a1 = 1)",
              (long long)total, (long long)wrong_other, (long long)wrong_t, first.c_str(), (long long)lead_one)};
}

Outcome intersection_oracle() {
  std::vector<Slope> slopes{Slope::infinity()};
  for (std::int64_t q = 1; q <= 12; ++q)
    for (std::int64_t p = -12; p <= 12; ++p)
      if (std::gcd(p, q) == 1) slopes.emplace_back(p, q);
  std::int64_t pairs = 0, bad = 0;
  for (const Slope& a : slopes) {
    for (const Slope& b : slopes) {
      ++pairs;
      if (brute_force_intersection(a, b, IntersectionMode::CurveCurve) != curve_curve_intersection(a, b)) ++bad;
      if (brute_force_intersection(a, b, IntersectionMode::ArcCurve) != arc_curve_intersection(a, b)) ++bad;
    }
  }
  std::int64_t arcs = 0, short_arcs = 0;
  for_coprime(100, [&](std::int64_t p, std::int64_t q) {
    ++arcs;
    if (arc_curve_intersection(Slope::infinity(), Slope(p, q)) < q) ++short_arcs;
  });
  return {bad == 0 && short_arcs == 0, fmt("%lld pairs x 2 modes, %lld mismatches; %lld arcs, %lld below q",
                                           (long long)pairs, (long long)bad, (long long)arcs, (long long)short_arcs)};
}

Outcome mirror_intervals() {
  std::int64_t total = 0, disjoint = 0;
  for_coprime(300, [&](std::int64_t p, std::int64_t q) {
    ++total;
    const VolumeInterval a = parent_volume_interval(Slope(p, q));
    const VolumeInterval b = parent_volume_interval(Slope(q - p, q));
    if (std::max(a.lower, b.lower) > std::min(a.upper, b.upper)) ++disjoint;
  });
  return {disjoint == 0, fmt("%lld slopes, %lld disjoint pairs", (long long)total, (long long)disjoint)};
}

Outcome composition() {
  std::vector<double> vols{2 * constants::v3};
  for (int i = 0; i <= 60; ++i) vols.push_back(std::pow(10.0, 3.0 * i / 60));
  double worst = 0;
  std::int64_t bad = 0;
  for (std::int64_t g = 1; g <= 10; ++g) {
    for (double v : vols) {
      const double direct = lambda_upper(g, v), composed = buser_upper(cheeger_upper(g, v));
      const double rel = direct == composed ? 0 : std::abs(direct - composed) / std::abs(composed);
      worst = std::max(worst, rel);
      if (rel > 1e-12) ++bad;
    }
  }
  return {bad == 0, fmt("%zu points, worst relative gap %.3g", 10 * vols.size(), worst)};
}

Outcome figure_eight_spectral() {
  const double pi = std::numbers::pi, vol = 2 * series_v3();
  const double lhs_ref = 64 * pi / vol + 2560 * pi * pi / (vol * vol);
  const double rhs_ref = 12650 / vol;
  const double lhs = lambda_upper(3, 2 * constants::v3), rhs = 12650 / (2 * constants::v3);
  auto six = [](double a, double b) { return fmt("%.6g", a) == fmt("%.6g", b); };
  const bool ok = lhs < rhs && six(lhs, lhs_ref) && six(rhs, rhs_ref);
  return {ok, fmt("%.6g < %.6g (independent %.6g, %.6g)", lhs, rhs, lhs_ref, rhs_ref)};
}

Outcome threshold_sharpness() {
  const double two_pi = 2 * std::numbers::pi;
  std::int64_t bad = 0, checks = 0;
  for (std::int64_t k = 1; k <= 200; ++k) {
    for (std::int64_t n = 1; k * n <= 200; ++n) {
      for (std::int64_t s : {n, -n}) {
        ++checks;
        if ((cusp_slope_length_lower(k, s) > two_pi) != (k * n >= 80)) ++bad;
      }
    }
  }
  for (std::int64_t n = 1; n <= 200; ++n) {
    for (std::int64_t s : {n, -n}) {
      checks += 2;
      if ((slope_length_lower(s) > two_pi) != (n >= 4)) ++bad;
      if (disk_obstruction_check(s) != (n >= 6)) ++bad;
    }
  }
  return {bad == 0, fmt("%lld checks, %lld off threshold", (long long)checks, (long long)bad)};
}

Outcome generator_consistency() {
  std::vector<std::pair<std::int64_t, std::int64_t>> slopes;
  for_coprime(8, [&](std::int64_t p, std::int64_t q) { slopes.emplace_back(p, q); });
  std::vector<std::int64_t> twists;
  for (std::int64_t n = 1; n <= 4; ++n) twists.insert(twists.end(), {n, -n});
  std::atomic<std::int64_t> bad{0}, total{0}, next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < slopes.size();) {
      const auto [p, q] = slopes[i];
      const PlanarDiagram aug = gen_augmented(Slope(p, q));
      for (std::int64_t n1 : twists) {
        const PlanarDiagram f1 = fill_crossing_circle(aug, aug.provenance().circles[0].component, n1);
        for (std::int64_t n2 : twists) {
          ++total;
          const PlanarDiagram f2 = fill_crossing_circle(f1, f1.provenance().circles[0].component, n2);
          const PlanarDiagram direct = gen_double_coil({p, q, n1, n2});
          const std::int64_t expect = q * (q - 1) * (std::abs(n1) + std::abs(n2));
          const bool ok = static_cast<std::int64_t>(f2.crossing_count()) == expect &&
                          static_cast<std::int64_t>(direct.crossing_count()) == expect &&
                          f2.component_count() == 1 && direct.component_count() == 1 &&
                          twist_regions(f2).count() == twist_regions(direct).count() &&
                          canonical_signature(f2) == canonical_signature(direct);
          if (!ok) ++bad;
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::max(1u, std::thread::hardware_concurrency()); ++t) pool.emplace_back(worker);
  pool.clear();
  return {bad == 0, fmt("%lld fillings, %lld mismatches", (long long)total.load(), (long long)bad.load())};
}

Outcome family_phenomena() {
  const AnalyzeOptions opts{std::max(1u, std::thread::hardware_concurrency()), 20000};
  CoilFamily a;
  a.kind = FamilyKind::FixedSlopeVaryTwists;
  a.p = 2;
  a.q = 5;
  a.n2 = 6;
  a.start = 4;
  a.end = 100;
  const FamilyReport ra = analyze_family(a, opts);
  bool ok_a = ra.rows.size() == 97 && ra.uncertified.empty() && ra.verdict == Verdict::ExpandingCertified;
  for (std::size_t i = 0; i < ra.rows.size(); ++i) {
    ok_a = ok_a && std::abs(ra.rows[i].volume.upper - 8 * constants::v8) <= 1e-9;
    if (i >= 2) {
      const auto d1 = ra.rows[i].crossings - ra.rows[i - 1].crossings;
      const auto d0 = ra.rows[i - 1].crossings - ra.rows[i - 2].crossings;
      ok_a = ok_a && d1 == d0 && d1 > 0;
    }
  }

  CoilFamily b;
  b.kind = FamilyKind::VarySlopeFixedTwists;
  b.sequence = SlopeSequence::Fibonacci;
  b.n = 4;
  b.start = 1;
  b.end = 20;
  const FamilyReport rb = analyze_family(b, opts);
  bool ok_b = rb.rows.size() == 20 && rb.verdict == Verdict::NotExpandingCertified;
  for (std::size_t i = 0; i < rb.rows.size(); ++i) {
    const double k = static_cast<double>(rb.rows[i].k);
    ok_b = ok_b && rb.rows[i].k == static_cast<std::int64_t>(i + 1) &&
           std::abs(rb.rows[i].volume.lower - (0.9718 * k - 0.3241)) <= 2e-4 * k;
    if (i > 0) {
      ok_b = ok_b && rb.rows[i].volume.lower > rb.rows[i - 1].volume.lower &&
             rb.rows[i].lambda.upper < rb.rows[i - 1].lambda.upper;
    }
  }
  const double first = rb.rows.front().lambda.upper, last = rb.rows.back().lambda.upper;
  ok_b = ok_b && last < first / 10;
  return {ok_a && ok_b, fmt("(a) %s, %zu rows; (b) %s, lambda upper %.4g -> %.4g", ok_a ? "ok" : "mismatch",
                            ra.rows.size(), ok_b ? "ok" : "mismatch", first, last)};
}

Outcome error_paths() {
  auto kind = [](auto&& f) -> std::string {
    try {
      f();
    } catch (const Error& e) {
      return std::string(e.name());
    }
    return "none";
  };
  const std::string a = kind([] { coil_volume_interval({1, 2, 1, 1}); });
  const std::string b = kind([] { parent_volume_interval(Slope(0, 1)); });
  const std::string c = kind([] { dehn_filling_factor(6.0); });
  const bool ok = a == "NoHyperbolicityCertificate" && b == "NonHyperbolicSlope" && c == "SlopeTooShort";
  return {ok, a + ", " + b + ", " + c};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "lower-bound coefficients at ell = 64.25", 1, constants_at_64_25},
      {2, "continued-fraction round trip, q <= 500", 5, cfrac_round_trip},
      {3, "two-bridge diagrams have k twist regions, q <= 100", 10, twist_region_count},
      {4, "intersection oracle and arc lower bound", 30, intersection_oracle},
      {5, "mirror volume intervals overlap, q <= 300", 5, mirror_intervals},
      {6, "Buser after Cheeger equals lambda_upper", 1, composition},
      {7, "figure-8 spectral inequality", 1, figure_eight_spectral},
      {8, "threshold sharpness", 1, threshold_sharpness},
      {9, "filled augmented link equals double coil, q <= 8", 30, generator_consistency},
      {10, "family phenomena", 10, family_phenomena},
      {11, "error paths", 1, error_paths},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = out.passed && secs < c.limit_seconds;
    if (!pass) ++failed;
    std::printf("%s criterion %2d: %s | %s | %.3fs (limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                out.detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
