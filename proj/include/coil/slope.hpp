#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace coil {

/// A reduced element of Q ∪ {1/0} naming a curve or arc on the framed
/// four-punctured sphere. Denominator is non-negative; 1/0 is the only
/// value with a zero denominator.
class Slope {
 public:
  /// Reduces and sign-normalizes. Throws ZeroOverZero for (0, 0).
  Slope(std::int64_t numerator, std::int64_t denominator);

  static Slope infinity() { return Slope(1, 0); }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  bool is_infinite() const noexcept { return q_ == 0; }

  /// Text form "p/q".
  std::string str() const;
  /// Parses "p/q" or a bare integer "p" (meaning p/1).
  static Slope parse(std::string_view text);

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Canonical positive-term continued fraction 1/(a1 + 1/(a2 + ... + 1/ak))
/// of a slope in (0, 1). The last term is at least 2 unless k = 1.
class ContinuedFraction {
 public:
  /// Validates canonicality; throws PreconditionViolation otherwise.
  explicit ContinuedFraction(std::vector<std::int64_t> terms);

  const std::vector<std::int64_t>& terms() const noexcept { return terms_; }
  std::size_t length() const noexcept { return terms_.size(); }
  std::int64_t crossing_sum() const;

  /// Text form "[a1,a2,...,ak]".
  std::string str() const;
  static ContinuedFraction parse(std::string_view text);

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<std::int64_t> terms_;
};

Slope reduce_slope(std::int64_t numerator, std::int64_t denominator);

/// Representative of s modulo integer twists with 0 < p < q.
/// Throws NonHyperbolicSlope when s is congruent to 0 or is 1/0.
Slope canonical_coil_slope(const Slope& s);

/// Requires 0 < p < q.
ContinuedFraction cfrac_expand(const Slope& s);
Slope cfrac_eval(const ContinuedFraction& c);

/// (q - p)/q: the canonical representative of -p/q. Requires 0 < p < q.
Slope mirror_slope(const Slope& s);

/// Throws PreconditionViolation unless 0 < p < q.
void require_unit_interval(const Slope& s, std::string_view what);

}  // namespace coil
