#include "coil/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "coil/error.hpp"

namespace coil {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t cfrac_length(const CoilSpec& spec) {
  return static_cast<std::int64_t>(cfrac_expand(spec.slope()).length());
}

}  // namespace

std::string condition_name(HyperbolicityCondition c) {
  switch (c) {
    case HyperbolicityCondition::None: return "None";
    case HyperbolicityCondition::TwistsAtLeast4: return "TwistsAtLeast4";
    case HyperbolicityCondition::KTimesNAtLeast80: return "KTimesNAtLeast80";
    case HyperbolicityCondition::Both: return "Both";
  }
  return "None";
}

VolumeInterval parent_volume_interval(const Slope& s) {
  const Slope canonical = canonical_coil_slope(s);
  const auto k = static_cast<double>(cfrac_expand(canonical).length());
  VolumeInterval v;
  v.lower = 4.0 * k * constants::v3 - constants::parent_deficit;
  v.upper = 4.0 * k * constants::v8;
  v.methods = {"parent-link belted sum of clasped 2-bridge links", "k=" + std::to_string(static_cast<int>(k))};
  return v;
}

double ell_param(std::int64_t k, std::int64_t n1, std::int64_t n2) {
  const auto n = static_cast<double>(std::min(std::llabs(n1), std::llabs(n2)));
  const auto kd = static_cast<double>(k);
  return std::max(0.25 + 4.0 * n * n, constants::ell_coefficient * kd * kd * n * n);
}

double dehn_filling_factor(double ell_min) {
  if (!(ell_min > kTwoPi)) {
    throw Error(ErrorKind::SlopeTooShort, "slope length " + std::to_string(ell_min) + " does not exceed 2 pi");
  }
  const double r = kTwoPi / ell_min;
  return std::pow(1.0 - r * r, 1.5);
}

double slope_length_lower(std::int64_t n) {
  const auto nd = static_cast<double>(n);
  return std::sqrt(0.25 + 4.0 * nd * nd);
}

double cusp_slope_length_lower(std::int64_t k, std::int64_t n) {
  return constants::cusp_arc_coefficient * static_cast<double>(k) * static_cast<double>(std::llabs(n));
}

HyperbolicityCertificate coil_hyperbolicity_certificate(std::int64_t k, std::int64_t n1, std::int64_t n2) {
  if (n1 == 0 || n2 == 0) {
    throw Error(ErrorKind::PreconditionViolation, "twist counts must be non-zero");
  }
  const std::int64_t a1 = std::llabs(n1);
  const std::int64_t a2 = std::llabs(n2);
  // Integer thresholds decide; the real-valued witnesses are reported.
  const bool twists = a1 >= 4 && a2 >= 4;
  const bool product = k * a1 >= 80 && k * a2 >= 80;
  HyperbolicityCertificate cert;
  cert.condition = twists && product ? HyperbolicityCondition::Both
                   : twists          ? HyperbolicityCondition::TwistsAtLeast4
                   : product         ? HyperbolicityCondition::KTimesNAtLeast80
                                     : HyperbolicityCondition::None;
  const std::int64_t ns[2] = {n1, n2};
  for (int i = 0; i < 2; ++i) {
    const std::int64_t a = std::llabs(ns[i]);
    const std::string idx = std::to_string(i + 1);
    cert.witnesses.push_back({"|n" + idx + "| >= 4", static_cast<double>(a), a >= 4});
    cert.witnesses.push_back({"k|n" + idx + "| >= 80", static_cast<double>(k * a), k * a >= 80});
    const double simple = slope_length_lower(ns[i]);
    const double cusp = cusp_slope_length_lower(k, ns[i]);
    cert.witnesses.push_back({"sqrt(1/4 + 4 n" + idx + "^2) > 2pi", simple, simple > kTwoPi});
    cert.witnesses.push_back({"4 sqrt(6 sqrt2) k |n" + idx + "| / 147 > 2pi", cusp, cusp > kTwoPi});
    cert.slope_length[i] = std::max(simple, cusp);
  }
  return cert;
}

VolumeInterval coil_volume_interval(const CoilSpec& spec) {
  spec.validate();
  const std::int64_t k = cfrac_length(spec);
  const auto cert = coil_hyperbolicity_certificate(k, spec.n1, spec.n2);
  if (cert.condition == HyperbolicityCondition::None) {
    throw Error(ErrorKind::NoHyperbolicityCertificate,
                "neither |n_i| >= 4 nor k|n_i| >= 80 holds for " + spec.str());
  }
  const double ell = ell_param(k, spec.n1, spec.n2);
  // ell is a squared length, so the filling factor takes sqrt(ell).
  const double factor = dehn_filling_factor(std::sqrt(ell));
  VolumeInterval v;
  v.lower = factor * (4.0 * static_cast<double>(k) * constants::v3 - constants::parent_deficit);
  v.upper = 4.0 * constants::v8 * static_cast<double>(k);
  v.strict_upper = true;
  v.methods = {"Dehn filling of the augmented parent link", "certificate=" + condition_name(cert.condition),
               "k=" + std::to_string(k)};
  return v;
}

double lambda_lower(double vol) {
  if (!(vol > constants::volume_floor)) {
    throw Error(ErrorKind::VolumeBelowFloor, "volume " + std::to_string(vol) + " is below pi/2^25");
  }
  return constants::lambda_floor_numerator / (vol * vol);
}

double cheeger_upper(std::int64_t genus, double vol) {
  if (genus < 1 || !(vol > 0.0)) {
    throw Error(ErrorKind::PreconditionViolation, "cheeger_upper needs genus >= 1 and vol > 0");
  }
  return 8.0 * std::numbers::pi * static_cast<double>(genus - 1) / vol;
}

double buser_upper(double h) {
  if (!(h >= 0.0)) throw Error(ErrorKind::PreconditionViolation, "Cheeger constant must be non-negative");
  return 4.0 * h + 10.0 * h * h;
}

double lambda_upper(std::int64_t genus, double vol) {
  if (genus < 1 || !(vol > 0.0)) {
    throw Error(ErrorKind::PreconditionViolation, "lambda_upper needs genus >= 1 and vol > 0");
  }
  const auto g1 = static_cast<double>(genus - 1);
  constexpr double pi = std::numbers::pi;
  return 32.0 * pi * g1 / vol + 640.0 * pi * pi * g1 * g1 / (vol * vol);
}

SpectralInterval coil_lambda_interval(const CoilSpec& spec) {
  const VolumeInterval v = coil_volume_interval(spec);
  SpectralInterval s;
  // Both bounds decrease in the volume, so the volume interval's far
  // endpoints keep them valid.
  s.lower = constants::lambda_floor_numerator / (v.upper * v.upper);
  s.upper = constants::lambda_ceiling_coefficient / v.lower;
  s.methods = {"A1=pi^2/2^50 over volume upper bound squared", "A2=12650 over volume lower bound",
               "Heegaard genus <= 3 from a 3-bridge presentation"};
  return s;
}

bool disk_obstruction_check(std::int64_t n2) {
  // 1/4 + 4 n^2 > 144  <=>  1 + 16 n^2 > 576
  const std::int64_t a = std::llabs(n2);
  if (a > 100) return true;
  return 1 + 16 * a * a > 576;
}

}  // namespace coil
