#include "coil/family.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <mutex>
#include <thread>

#include "coil/error.hpp"

namespace coil {

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads. Each index
// writes only its own slot, so the output order does not depend on jobs.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw Error(ErrorKind::ConfigError, "key '" + key + "' expects an integer, got '" + v + "'");
  }
  return out;
}

template <class T>
Trend trend_of(const std::vector<T>& xs) {
  bool inc = true, dec = true, flat = true;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) inc = false;
    if (!(xs[i] < xs[i - 1])) dec = false;
    if (!(xs[i] == xs[i - 1])) flat = false;
  }
  if (flat) return Trend::Constant;
  if (inc) return Trend::StrictlyIncreasing;
  if (dec) return Trend::StrictlyDecreasing;
  return Trend::Mixed;
}

}  // namespace

std::string family_kind_name(FamilyKind k) {
  return k == FamilyKind::FixedSlopeVaryTwists ? "FixedSlopeVaryTwists" : "VarySlopeFixedTwists";
}

std::string sequence_name(SlopeSequence s) {
  switch (s) {
    case SlopeSequence::Fibonacci: return "fibonacci";
    case SlopeSequence::OddDenominators: return "odd-denominators";
    case SlopeSequence::CustomList: return "custom-list";
  }
  return "custom-list";
}

std::string trend_name(Trend t) {
  switch (t) {
    case Trend::Constant: return "constant";
    case Trend::StrictlyIncreasing: return "strictly-increasing";
    case Trend::StrictlyDecreasing: return "strictly-decreasing";
    case Trend::Mixed: return "mixed";
  }
  return "mixed";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ExpandingCertified: return "ExpandingCertified";
    case Verdict::NotExpandingCertified: return "NotExpandingCertified";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Slope sequence_slope(SlopeSequence s, std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::PreconditionViolation, "sequence index must be >= 1");
  if (s == SlopeSequence::OddDenominators) {
    if (m > (INT64_MAX - 1) / 2) throw Error(ErrorKind::Overflow, "odd denominator overflows");
    return Slope(1, 2 * m + 1);
  }
  if (s != SlopeSequence::Fibonacci) {
    throw Error(ErrorKind::PreconditionViolation, "custom-list slopes come from the family");
  }
  std::int64_t a = 1, b = 1;  // F(1), F(2)
  for (std::int64_t i = 1; i < m + 1; ++i) {
    std::int64_t c = 0;
    if (__builtin_add_overflow(a, b, &c)) throw Error(ErrorKind::Overflow, "Fibonacci index too large");
    a = b;
    b = c;
  }
  // a = F(m+1), b = F(m+2)
  return Slope(a, b);
}

std::vector<std::int64_t> CoilFamily::indices() const {
  if (step <= 0) throw Error(ErrorKind::EmptyRange, "step must be positive");
  if (start > end) throw Error(ErrorKind::EmptyRange, "range start exceeds end");
  std::vector<std::int64_t> out;
  for (std::int64_t i = start; i <= end; i += step) {
    out.push_back(i);
    if (end - i < step) break;
  }
  return out;
}

CoilSpec CoilFamily::member(std::int64_t index) const {
  if (kind == FamilyKind::FixedSlopeVaryTwists) return CoilSpec{p, q, index, n2};
  if (sequence == SlopeSequence::CustomList &&
      (index < 1 || index > static_cast<std::int64_t>(custom.size()))) {
    throw Error(ErrorKind::PreconditionViolation, "custom-list index out of range");
  }
  const Slope s = sequence == SlopeSequence::CustomList ? custom[static_cast<std::size_t>(index - 1)]
                                                        : sequence_slope(sequence, index);
  return CoilSpec{s.p(), s.q(), n, n};
}

CoilFamily CoilFamily::parse_config(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::ConfigError, "line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    static const char* const known[] = {"kind", "p",   "q",    "n1",       "n2",    "n",
                                        "start", "end", "step", "sequence", "slopes"};
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) ==
        std::end(known)) {
      throw Error(ErrorKind::ConfigError, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (kv.count(key)) throw Error(ErrorKind::ConfigError, "duplicate key '" + key + "'");
    kv[key] = trim(std::string_view(t).substr(eq + 1));
  }
  auto need = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorKind::ConfigError, "missing key '" + key + "'");
    return it->second;
  };
  auto get_int = [&](const std::string& key, std::int64_t fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : parse_int(key, it->second);
  };

  CoilFamily f;
  const std::string& kind = need("kind");
  if (kind == "fixed-slope" || kind == "FixedSlopeVaryTwists") {
    f.kind = FamilyKind::FixedSlopeVaryTwists;
    f.p = parse_int("p", need("p"));
    f.q = parse_int("q", need("q"));
    f.n2 = parse_int("n2", need("n2"));
    f.start = parse_int("start", need("start"));
    f.end = parse_int("end", need("end"));
  } else if (kind == "vary-slope" || kind == "VarySlopeFixedTwists") {
    f.kind = FamilyKind::VarySlopeFixedTwists;
    if (kv.count("n")) {
      f.n = parse_int("n", kv["n"]);
    } else {
      f.n = parse_int("n1", need("n1"));
      if (parse_int("n2", need("n2")) != f.n) throw Error(ErrorKind::ConfigError, "vary-slope needs n1 = n2");
    }
    const std::string& seq = need("sequence");
    if (seq == "fibonacci") {
      f.sequence = SlopeSequence::Fibonacci;
    } else if (seq == "odd-denominators") {
      f.sequence = SlopeSequence::OddDenominators;
    } else if (seq == "custom-list") {
      f.sequence = SlopeSequence::CustomList;
      std::string_view list = need("slopes");
      while (!list.empty()) {
        const auto comma = list.find(',');
        const std::string item = trim(list.substr(0, comma));
        list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
        if (item.empty()) continue;
        try {
          f.custom.push_back(Slope::parse(item));
        } catch (const Error& e) {
          throw Error(ErrorKind::ConfigError, "bad slope '" + item + "': " + e.what());
        }
      }
      if (f.custom.empty()) throw Error(ErrorKind::EmptyRange, "custom-list has no slopes");
    } else {
      throw Error(ErrorKind::ConfigError, "unknown sequence '" + seq + "'");
    }
    const std::int64_t default_end = f.sequence == SlopeSequence::CustomList
                                         ? static_cast<std::int64_t>(f.custom.size())
                                         : parse_int("end", need("end"));
    f.start = get_int("start", 1);
    f.end = get_int("end", default_end);
  } else {
    throw Error(ErrorKind::ConfigError, "unknown kind '" + kind + "'");
  }
  f.step = get_int("step", 1);
  return f;
}

FamilyReport analyze_family(const CoilFamily& f, const AnalyzeOptions& opts) {
  const auto idx = f.indices();
  struct Slot {
    std::optional<FamilyRow> row;
    std::optional<UncertifiedRow> bad;
  };
  std::vector<Slot> slots(idx.size());
  parallel_for(idx.size(), opts.jobs, [&](std::size_t i) {
    const std::int64_t index = idx[i];
    CoilSpec spec{};
    try {
      spec = f.member(index);
      spec.validate();
      FamilyRow row;
      row.index = index;
      row.spec = spec;
      row.k = static_cast<std::int64_t>(cfrac_expand(spec.slope()).length());
      row.crossings = spec.crossing_count();
      row.volume = coil_volume_interval(spec);
      row.lambda = coil_lambda_interval(spec);
      if (row.crossings <= opts.diagram_cap) {
        const PlanarDiagram d = gen_double_coil(spec);
        row.twist_regions = twist_regions(d).count();
        row.generalized_twist_regions = generalized_twist_regions(d).count;
      } else {
        // Same provenance rule the diagram would report: two boxes.
        row.generalized_twist_regions = 2;
      }
      slots[i].row = std::move(row);
    } catch (const Error& e) {
      slots[i].bad = UncertifiedRow{index, spec, std::string(e.name())};
    }
  });

  FamilyReport r;
  r.family = f;
  for (auto& s : slots) {
    if (s.row) r.rows.push_back(std::move(*s.row));
    if (s.bad) r.uncertified.push_back(std::move(*s.bad));
  }
  if (r.rows.empty()) return r;

  FamilySummary sum;
  std::vector<double> lowers, lambda_uppers;
  std::vector<std::int64_t> ks;
  sum.sup_volume_upper = r.rows.front().volume.upper;
  sum.inf_volume_lower = r.rows.front().volume.lower;
  sum.inf_lambda_lower = r.rows.front().lambda.lower;
  sum.sup_lambda_upper = r.rows.front().lambda.upper;
  for (const auto& row : r.rows) {
    sum.sup_volume_upper = std::max(sum.sup_volume_upper, row.volume.upper);
    sum.inf_volume_lower = std::min(sum.inf_volume_lower, row.volume.lower);
    sum.inf_lambda_lower = std::min(sum.inf_lambda_lower, row.lambda.lower);
    sum.sup_lambda_upper = std::max(sum.sup_lambda_upper, row.lambda.upper);
    lowers.push_back(row.volume.lower);
    lambda_uppers.push_back(row.lambda.upper);
    ks.push_back(row.k);
  }
  sum.volume_lower_trend = trend_of(lowers);
  sum.lambda_upper_trend = trend_of(lambda_uppers);
  sum.k_trend = trend_of(ks);
  r.summary = sum;
  r.verdict = expanding_verdict(r);
  return r;
}

Verdict expanding_verdict(const FamilyReport& r) {
  if (r.rows.empty()) throw Error(ErrorKind::NoCertifiedRows, "no member of the family has a certificate");
  if (r.rows.size() == 1) return Verdict::ExpandingCertified;
  if (r.family.kind == FamilyKind::FixedSlopeVaryTwists) return Verdict::ExpandingCertified;
  std::vector<std::int64_t> ks;
  for (const auto& row : r.rows) ks.push_back(row.k);
  if (std::all_of(ks.begin(), ks.end(), [&](std::int64_t k) { return k == ks.front(); })) {
    return Verdict::ExpandingCertified;
  }
  // A literal list is not extrapolable, so varying k says nothing.
  if (r.family.sequence == SlopeSequence::CustomList) return Verdict::Inconclusive;
  return trend_of(ks) == Trend::StrictlyIncreasing ? Verdict::NotExpandingCertified : Verdict::Inconclusive;
}

std::vector<TwistGrowthRow> twist_growth_experiment(std::int64_t p, std::int64_t q, std::int64_t n2_fixed,
                                                    std::int64_t n1_start, std::int64_t n1_end,
                                                    const AnalyzeOptions& opts) {
  CoilFamily f;
  f.p = p;
  f.q = q;
  f.n2 = n2_fixed;
  f.start = n1_start;
  f.end = n1_end;
  const auto idx = f.indices();
  std::vector<TwistGrowthRow> rows(idx.size());
  parallel_for(idx.size(), opts.jobs, [&](std::size_t i) {
    const CoilSpec spec = f.member(idx[i]);
    TwistGrowthRow row;
    row.n1 = idx[i];
    row.crossings = spec.crossing_count();
    row.volume_upper = coil_volume_interval(spec).upper;
    row.disk_obstruction = disk_obstruction_check(n2_fixed);
    if (row.crossings <= opts.diagram_cap) row.twist_regions = twist_regions(gen_double_coil(spec)).count();
    rows[i] = row;
  });
  return rows;
}

}  // namespace coil
