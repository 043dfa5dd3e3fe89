#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coil/bounds.hpp"
#include "coil/generators.hpp"

namespace coil {

enum class FamilyKind { FixedSlopeVaryTwists, VarySlopeFixedTwists };
enum class SlopeSequence { Fibonacci, OddDenominators, CustomList };

std::string family_kind_name(FamilyKind k);
std::string sequence_name(SlopeSequence s);

/// Fibonacci index m >= 1 gives F(m+1)/F(m+2): 1/2, 2/3, 3/5, ... with
/// continued fraction length m. Odd denominators: m >= 1 gives 1/(2m+1).
Slope sequence_slope(SlopeSequence s, std::int64_t m);

struct CoilFamily {
  FamilyKind kind = FamilyKind::FixedSlopeVaryTwists;
  // FixedSlopeVaryTwists: slope p/q, n2 fixed, n1 runs over the range.
  std::int64_t p = 1;
  std::int64_t q = 2;
  std::int64_t n2 = 1;
  // VarySlopeFixedTwists: n1 = n2 = n, the index runs over the sequence.
  std::int64_t n = 4;
  SlopeSequence sequence = SlopeSequence::Fibonacci;
  std::vector<Slope> custom;  // 1-based indices for CustomList
  std::int64_t start = 1;
  std::int64_t end = 1;
  std::int64_t step = 1;

  /// Indices in the range; throws EmptyRange.
  std::vector<std::int64_t> indices() const;
  CoilSpec member(std::int64_t index) const;

  /// key=value lines; '#' starts a comment. Keys: kind (fixed-slope or
  /// vary-slope), p, q, n1, n2, n, start, end, step, sequence (fibonacci,
  /// odd-denominators, custom-list), slopes (comma separated).
  static CoilFamily parse_config(std::string_view text);
};

struct FamilyRow {
  std::int64_t index = 0;
  CoilSpec spec;
  std::int64_t k = 0;
  std::int64_t crossings = 0;
  /// t(D) of the generated diagram; empty when the diagram exceeds the cap.
  std::optional<std::size_t> twist_regions;
  std::size_t generalized_twist_regions = 0;
  VolumeInterval volume;
  SpectralInterval lambda;
};

struct UncertifiedRow {
  std::int64_t index = 0;
  CoilSpec spec;
  std::string error;
};

enum class Trend { Constant, StrictlyIncreasing, StrictlyDecreasing, Mixed };
std::string trend_name(Trend t);

struct FamilySummary {
  double sup_volume_upper = 0.0;
  double inf_volume_lower = 0.0;
  Trend volume_lower_trend = Trend::Constant;
  double inf_lambda_lower = 0.0;
  double sup_lambda_upper = 0.0;
  Trend lambda_upper_trend = Trend::Constant;
  Trend k_trend = Trend::Constant;
};

enum class Verdict { ExpandingCertified, NotExpandingCertified, Inconclusive };
std::string verdict_name(Verdict v);

struct FamilyReport {
  CoilFamily family;
  std::vector<FamilyRow> rows;  // certified members in index order
  std::vector<UncertifiedRow> uncertified;
  std::optional<FamilySummary> summary;  // empty when no row is certified
  std::optional<Verdict> verdict;
};

struct AnalyzeOptions {
  unsigned jobs = 1;
  /// Diagrams above this many crossings are not built; t(D) is left empty.
  std::int64_t diagram_cap = 20000;
};

FamilyReport analyze_family(const CoilFamily& f, const AnalyzeOptions& opts = {});

/// Decided by the family kind: fixed k means bounded volumes, strictly
/// increasing k along a named sequence means unbounded volume lowers.
/// Throws NoCertifiedRows.
Verdict expanding_verdict(const FamilyReport& r);

struct TwistGrowthRow {
  std::int64_t n1 = 0;
  std::int64_t crossings = 0;
  std::optional<std::size_t> twist_regions;
  double volume_upper = 0.0;
  bool disk_obstruction = false;
};

std::vector<TwistGrowthRow> twist_growth_experiment(std::int64_t p, std::int64_t q, std::int64_t n2_fixed,
                                                    std::int64_t n1_start, std::int64_t n1_end,
                                                    const AnalyzeOptions& opts = {});

}  // namespace coil
