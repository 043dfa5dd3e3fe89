#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "coil/generators.hpp"
#include "coil/slope.hpp"

namespace coil {

/// Fixed constants of the volume and spectral estimates.
namespace constants {
/// Volume of the regular ideal tetrahedron.
inline constexpr double v3 = 1.0149416064096536250;
/// Volume of the regular ideal octahedron.
inline constexpr double v8 = 3.6638623767088760602;
inline constexpr double parent_deficit = 1.3536;
/// 4 sqrt(6 sqrt 2) / 147: cusp arc length per unit of k|n|.
inline const double cusp_arc_coefficient = 4.0 * std::sqrt(6.0 * std::numbers::sqrt2) / 147.0;
/// 32 sqrt 2 / 7203, the square of cusp_arc_coefficient.
inline constexpr double ell_coefficient = 32.0 * std::numbers::sqrt2 / 7203.0;
/// pi^2 / 2^50.
inline constexpr double lambda_floor_numerator = std::numbers::pi * std::numbers::pi / 1125899906842624.0;
inline constexpr double lambda_ceiling_coefficient = 12650.0;
/// pi / 2^25.
inline constexpr double volume_floor = std::numbers::pi / 33554432.0;
inline constexpr double figure8_volume = 2.0 * v3;
inline constexpr std::int64_t heegaard_genus_bound = 3;
}  // namespace constants

struct VolumeInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool strict_upper = false;
  std::vector<std::string> methods;
};

struct SpectralInterval {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<std::string> methods;
};

enum class HyperbolicityCondition { None, TwistsAtLeast4, KTimesNAtLeast80, Both };

std::string condition_name(HyperbolicityCondition c);

struct Witness {
  std::string inequality;
  double value;   // the left-hand side evaluated
  bool holds;
};

struct HyperbolicityCertificate {
  HyperbolicityCondition condition = HyperbolicityCondition::None;
  std::vector<Witness> witnesses;
  /// Lower bounds on the lengths of the 1/n1 and 1/n2 filling slopes.
  double slope_length[2] = {0.0, 0.0};
};

/// [4k v3 - 1.3536, 4k v8] for the augmented parent link of p/q. Slopes
/// outside (0, 1) are first moved there by integer twists.
VolumeInterval parent_volume_interval(const Slope& s);

/// Squared-length parameter: with n = min(|n1|, |n2|),
/// max(1/4 + 4n^2, 32 sqrt2 k^2 n^2 / 7203).
double ell_param(std::int64_t k, std::int64_t n1, std::int64_t n2);

/// (1 - (2 pi / ell_min)^2)^(3/2); throws SlopeTooShort when ell_min <= 2 pi.
double dehn_filling_factor(double ell_min);

/// sqrt(1/4 + 4 n^2).
double slope_length_lower(std::int64_t n);
/// 4 sqrt(6 sqrt2) k |n| / 147.
double cusp_slope_length_lower(std::int64_t k, std::int64_t n);

HyperbolicityCertificate coil_hyperbolicity_certificate(std::int64_t k, std::int64_t n1, std::int64_t n2);

/// Throws NoHyperbolicityCertificate when neither twist condition holds.
VolumeInterval coil_volume_interval(const CoilSpec& spec);

/// (pi^2 / 2^50) / vol^2; throws VolumeBelowFloor unless vol > pi / 2^25.
double lambda_lower(double vol);
/// Cheeger constant bound 8 pi (g - 1) / vol.
double cheeger_upper(std::int64_t genus, double vol);
/// Buser's inequality: 4h + 10h^2.
double buser_upper(double h);
/// 32 pi (g-1)/vol + 640 pi^2 (g-1)^2 / vol^2.
double lambda_upper(std::int64_t genus, double vol);

/// [A1 / V.upper^2, A2 / V.lower] with V = coil_volume_interval(spec).
SpectralInterval coil_lambda_interval(const CoilSpec& spec);

/// True iff sqrt(1/4 + 4 n2^2) > 12, i.e. |n2| >= 6: the punctured disk
/// meeting C2 cannot survive 1/n2 filling.
bool disk_obstruction_check(std::int64_t n2);

}  // namespace coil
