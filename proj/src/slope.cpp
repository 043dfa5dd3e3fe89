#include "coil/slope.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "coil/error.hpp"

namespace coil {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroOverZero: return "ZeroOverZero";
    case ErrorKind::NonHyperbolicSlope: return "NonHyperbolicSlope";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorKind::UnsupportedTwistCurve: return "UnsupportedTwistCurve";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonQuadrivalent: return "NonQuadrivalent";
    case ErrorKind::EdgePairingError: return "EdgePairingError";
    case ErrorKind::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::NotACrossingCircle: return "NotACrossingCircle";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::SlopeTooShort: return "SlopeTooShort";
    case ErrorKind::NoHyperbolicityCertificate: return "NoHyperbolicityCertificate";
    case ErrorKind::VolumeBelowFloor: return "VolumeBelowFloor";
    case ErrorKind::NoCertifiedRows: return "NoCertifiedRows";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {

std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(prod, c, &sum)) {
    throw Error(ErrorKind::Overflow, "continued fraction value exceeds 64 bits");
  }
  return sum;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  auto first = text.data();
  auto last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::SyntaxError, "bad integer '" + std::string(text) + "' in " + std::string(what));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Slope::Slope(std::int64_t numerator, std::int64_t denominator) {
  if (numerator == 0 && denominator == 0) {
    throw Error(ErrorKind::ZeroOverZero, "slope 0/0 is undefined");
  }
  if (denominator == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  p_ = numerator / g;
  q_ = denominator / g;
}

std::string Slope::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Slope Slope::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text, "slope"), 1);
  return Slope(parse_int(trim(text.substr(0, slash)), "slope"),
               parse_int(trim(text.substr(slash + 1)), "slope"));
}

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw Error(ErrorKind::PreconditionViolation, "continued fraction needs at least one term");
  }
  for (auto a : terms_) {
    if (a < 1) throw Error(ErrorKind::PreconditionViolation, "continued fraction terms must be positive");
  }
  if (terms_.back() < 2) {
    throw Error(ErrorKind::PreconditionViolation, "canonical continued fraction ends in a term >= 2");
  }
}

std::int64_t ContinuedFraction::crossing_sum() const {
  return std::accumulate(terms_.begin(), terms_.end(), std::int64_t{0});
}

std::string ContinuedFraction::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(terms_[i]);
  }
  return out + "]";
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorKind::SyntaxError, "continued fraction must look like [a1,...,ak]");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> terms;
  while (true) {
    const auto comma = text.find(',');
    terms.push_back(parse_int(trim(text.substr(0, comma)), "continued fraction"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ContinuedFraction(std::move(terms));
}

Slope reduce_slope(std::int64_t numerator, std::int64_t denominator) {
  return Slope(numerator, denominator);
}

void require_unit_interval(const Slope& s, std::string_view what) {
  if (!(s.p() > 0 && s.p() < s.q())) {
    throw Error(ErrorKind::PreconditionViolation,
                std::string(what) + " requires 0 < p < q, got " + s.str());
  }
}

Slope canonical_coil_slope(const Slope& s) {
  if (s.is_infinite()) {
    throw Error(ErrorKind::NonHyperbolicSlope, "slope 1/0 gives a non-hyperbolic link");
  }
  std::int64_t r = s.p() % s.q();
  if (r < 0) r += s.q();
  if (r == 0) {
    throw Error(ErrorKind::NonHyperbolicSlope, "slope " + s.str() + " is an integer, equivalent to 0");
  }
  return Slope(r, s.q());
}

ContinuedFraction cfrac_expand(const Slope& s) {
  require_unit_interval(s, "cfrac_expand");
  // p/q = 1/(q/p): each Euclidean quotient of (q, p) is one term.
  std::vector<std::int64_t> terms;
  std::int64_t num = s.q();
  std::int64_t den = s.p();
  while (den != 0) {
    terms.push_back(num / den);
    const std::int64_t rem = num % den;
    num = den;
    den = rem;
  }
  return ContinuedFraction(std::move(terms));
}

Slope cfrac_eval(const ContinuedFraction& c) {
  const auto& a = c.terms();
  std::int64_t num = 1;
  std::int64_t den = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    // 1 / (a_i + num/den) = den / (a_i * den + num)
    const std::int64_t next_den = checked_mul_add(a[i], den, num);
    num = den;
    den = next_den;
  }
  return Slope(num, den);
}

Slope mirror_slope(const Slope& s) {
  require_unit_interval(s, "mirror_slope");
  return Slope(s.q() - s.p(), s.q());
}

}  // namespace coil
