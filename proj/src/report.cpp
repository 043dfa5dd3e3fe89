#include "coil/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "coil/error.hpp"

namespace coil {

namespace {

using json = nlohmann::ordered_json;

int clamp_digits(int digits) {
  if (digits < 1 || digits > kMaxPrecision) {
    throw Error(ErrorKind::PreconditionViolation, "precision must be between 1 and 15");
  }
  return digits;
}

json spec_json(const CoilSpec& s) { return json{{"p", s.p}, {"q", s.q}, {"n1", s.n1}, {"n2", s.n2}}; }

json methods_json(const std::vector<std::string>& a, const std::vector<std::string>& b = {}) {
  json out = json::array();
  for (const auto& m : a) out.push_back(m);
  for (const auto& m : b) out.push_back(m);
  return out;
}

std::string opt_count(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

json opt_count_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", clamp_digits(digits), v);
  return buf;
}

double round_sig(double v, int digits) { return std::strtod(format_sig(v, digits).c_str(), nullptr); }

json bounds_json(const CoilSpec& spec, int digits) {
  spec.validate();
  const auto k = static_cast<std::int64_t>(cfrac_expand(spec.slope()).length());
  const auto cert = coil_hyperbolicity_certificate(k, spec.n1, spec.n2);
  const VolumeInterval vol = coil_volume_interval(spec);
  const SpectralInterval lam = coil_lambda_interval(spec);
  json witnesses = json::array();
  for (const auto& w : cert.witnesses) {
    witnesses.push_back({{"inequality", w.inequality}, {"value", round_sig(w.value, digits)}, {"holds", w.holds}});
  }
  return json{
      {"spec", spec_json(spec)},
      {"k", k},
      {"ell", round_sig(ell_param(k, spec.n1, spec.n2), digits)},
      {"certificate", {{"condition", condition_name(cert.condition)}, {"witnesses", witnesses}}},
      {"volume",
       {{"lower", round_sig(vol.lower, digits)},
        {"upper", round_sig(vol.upper, digits)},
        {"strictUpper", vol.strict_upper}}},
      {"lambda", {{"lower", round_sig(lam.lower, digits)}, {"upper", round_sig(lam.upper, digits)}}},
      {"methods", methods_json(vol.methods, lam.methods)},
  };
}

std::string bounds_csv_header() {
  return "p,q,n1,n2,k,ell,certificate,volume_lower,volume_upper,strict_upper,lambda_lower,lambda_upper";
}

std::string bounds_csv_row(const CoilSpec& spec, int digits) {
  const json j = bounds_json(spec, digits);
  std::ostringstream out;
  out << spec.p << ',' << spec.q << ',' << spec.n1 << ',' << spec.n2 << ',' << j["k"].get<std::int64_t>() << ','
      << format_sig(j["ell"].get<double>(), digits) << ',' << j["certificate"]["condition"].get<std::string>()
      << ',' << format_sig(j["volume"]["lower"].get<double>(), digits) << ','
      << format_sig(j["volume"]["upper"].get<double>(), digits) << ','
      << (j["volume"]["strictUpper"].get<bool>() ? "true" : "false") << ','
      << format_sig(j["lambda"]["lower"].get<double>(), digits) << ','
      << format_sig(j["lambda"]["upper"].get<double>(), digits);
  return out.str();
}

json family_json(const FamilyReport& r, int digits) {
  const CoilFamily& f = r.family;
  json fam{{"kind", family_kind_name(f.kind)}};
  if (f.kind == FamilyKind::FixedSlopeVaryTwists) {
    fam["p"] = f.p;
    fam["q"] = f.q;
    fam["n2"] = f.n2;
  } else {
    fam["n"] = f.n;
    fam["sequence"] = sequence_name(f.sequence);
    if (f.sequence == SlopeSequence::CustomList) {
      json list = json::array();
      for (const auto& s : f.custom) list.push_back(s.str());
      fam["slopes"] = list;
    }
  }
  fam["range"] = {{"start", f.start}, {"end", f.end}, {"step", f.step}};

  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({
        {"index", row.index},
        {"spec", spec_json(row.spec)},
        {"k", row.k},
        {"crossings", row.crossings},
        {"twistRegions", opt_count_json(row.twist_regions)},
        {"generalizedTwistRegions", row.generalized_twist_regions},
        {"volume",
         {{"lower", round_sig(row.volume.lower, digits)},
          {"upper", round_sig(row.volume.upper, digits)},
          {"strictUpper", row.volume.strict_upper}}},
        {"lambda", {{"lower", round_sig(row.lambda.lower, digits)}, {"upper", round_sig(row.lambda.upper, digits)}}},
    });
  }
  json bad = json::array();
  for (const auto& u : r.uncertified) bad.push_back({{"index", u.index}, {"spec", spec_json(u.spec)}, {"error", u.error}});

  json out{{"family", fam}, {"rows", rows}, {"uncertified", bad}};
  if (r.summary) {
    const auto& s = *r.summary;
    out["summary"] = {
        {"supVolumeUpper", round_sig(s.sup_volume_upper, digits)},
        {"infVolumeLower", round_sig(s.inf_volume_lower, digits)},
        {"volumeLowerTrend", trend_name(s.volume_lower_trend)},
        {"infLambdaLower", round_sig(s.inf_lambda_lower, digits)},
        {"supLambdaUpper", round_sig(s.sup_lambda_upper, digits)},
        {"lambdaUpperTrend", trend_name(s.lambda_upper_trend)},
        {"kTrend", trend_name(s.k_trend)},
    };
  } else {
    out["summary"] = nullptr;
  }
  out["verdict"] = r.verdict ? json(verdict_name(*r.verdict)) : json(nullptr);
  out["proxies"] = "crossings and twistRegions are diagram-level proxies; twistRegions bounds tau from above";
  return out;
}

std::string family_csv(const FamilyReport& r, int digits) {
  std::ostringstream out;
  out << "index,p,q,n1,n2,k,crossings,twist_regions,generalized_twist_regions,volume_lower,volume_upper,"
         "lambda_lower,lambda_upper,status\n";
  std::vector<std::pair<std::int64_t, std::string>> lines;
  for (const auto& row : r.rows) {
    std::ostringstream l;
    l << row.index << ',' << row.spec.p << ',' << row.spec.q << ',' << row.spec.n1 << ',' << row.spec.n2 << ','
      << row.k << ',' << row.crossings << ',' << opt_count(row.twist_regions) << ','
      << row.generalized_twist_regions << ',' << format_sig(row.volume.lower, digits) << ','
      << format_sig(row.volume.upper, digits) << ',' << format_sig(row.lambda.lower, digits) << ','
      << format_sig(row.lambda.upper, digits) << ",certified";
    lines.emplace_back(row.index, l.str());
  }
  for (const auto& u : r.uncertified) {
    std::ostringstream l;
    l << u.index << ',' << u.spec.p << ',' << u.spec.q << ',' << u.spec.n1 << ',' << u.spec.n2 << ",,,,,,,,,"
      << u.error;
    lines.emplace_back(u.index, l.str());
  }
  std::stable_sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [i, l] : lines) out << l << '\n';
  return out.str();
}

json twist_growth_json(const std::vector<TwistGrowthRow>& rows, int digits) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n1", r.n1},
                   {"crossings", r.crossings},
                   {"twistRegions", opt_count_json(r.twist_regions)},
                   {"volumeUpper", round_sig(r.volume_upper, digits)},
                   {"diskObstruction", r.disk_obstruction}});
  }
  return out;
}

std::string twist_growth_csv(const std::vector<TwistGrowthRow>& rows, int digits) {
  std::ostringstream out;
  out << "n1,crossings,twist_regions,volume_upper,disk_obstruction\n";
  for (const auto& r : rows) {
    out << r.n1 << ',' << r.crossings << ',' << opt_count(r.twist_regions) << ','
        << format_sig(r.volume_upper, digits) << ',' << (r.disk_obstruction ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace coil
