#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coil/bounds.hpp"
#include "coil/family.hpp"

namespace coil {

inline constexpr int kDefaultPrecision = 6;
inline constexpr int kMaxPrecision = 15;

/// v rounded to `digits` significant digits (1..15).
double round_sig(double v, int digits);
/// The same rounding as text, in %g style.
std::string format_sig(double v, int digits);

/// {spec, k, ell, certificate, volume, lambda, methods}; throws the domain
/// errors of coil_volume_interval.
nlohmann::ordered_json bounds_json(const CoilSpec& spec, int digits);
/// Fixed column order; one row per spec.
std::string bounds_csv_header();
std::string bounds_csv_row(const CoilSpec& spec, int digits);

nlohmann::ordered_json family_json(const FamilyReport& r, int digits);
std::string family_csv(const FamilyReport& r, int digits);

nlohmann::ordered_json twist_growth_json(const std::vector<TwistGrowthRow>& rows, int digits);
std::string twist_growth_csv(const std::vector<TwistGrowthRow>& rows, int digits);

}  // namespace coil
