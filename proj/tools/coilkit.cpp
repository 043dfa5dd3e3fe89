// coilkit: command-line front end to the coil library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "coil/bounds.hpp"
#include "coil/curves.hpp"
#include "coil/error.hpp"
#include "coil/family.hpp"
#include "coil/generators.hpp"
#include "coil/report.hpp"
#include "coil/svg.hpp"
#include "coil/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::int64_t> p, q, n1, n2;
  std::string slope, slope2, cfrac, kind, format = "text", out, svg, config, pd_path;
  bool oracle = false;
  std::int64_t oracle_cap = coil::kDefaultOracleCap;
  unsigned jobs = 1;
  int precision = coil::kDefaultPrecision;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

coil::Slope slope_arg(const Options& o, const std::string& positional) {
  if (!positional.empty()) return coil::Slope::parse(positional);
  if (!o.slope.empty()) return coil::Slope::parse(o.slope);
  if (o.p && o.q) return coil::reduce_slope(*o.p, *o.q);
  throw CLI::ValidationError("slope", "give a slope p/q, --slope or --p and --q");
}

coil::CoilSpec spec_arg(const Options& o) {
  if (!o.n1 || !o.n2) throw CLI::ValidationError("spec", "--n1 and --n2 are required");
  std::int64_t p = 0, q = 0;
  if (o.p && o.q) {
    p = *o.p;
    q = *o.q;
  } else if (!o.slope.empty()) {
    const coil::Slope s = coil::Slope::parse(o.slope);
    p = s.p();
    q = s.q();
  } else {
    throw CLI::ValidationError("spec", "--p and --q (or --slope) are required");
  }
  return coil::CoilSpec{p, q, *o.n1, *o.n2};
}

int cmd_cfrac(const Options& o) {
  if (!o.cfrac.empty()) {
    const auto c = coil::ContinuedFraction::parse(o.cfrac);
    const coil::Slope s = coil::cfrac_eval(c);
    if (o.format == "json") {
      emit(o, dump(json{{"slope", s.str()}, {"cfrac", c.str()}, {"k", c.length()}}));
    } else {
      emit(o, s.str() + " k=" + std::to_string(c.length()) + "\n");
    }
    return 0;
  }
  const coil::Slope s = slope_arg(o, o.slope2);
  coil::require_unit_interval(s, "cfrac");
  const auto c = coil::cfrac_expand(s);
  if (o.format == "json") {
    emit(o, dump(json{{"slope", s.str()}, {"cfrac", c.str()}, {"k", c.length()}}));
  } else {
    emit(o, c.str() + " k=" + std::to_string(c.length()) + "\n");
  }
  return 0;
}

int cmd_slope(const Options& o) {
  const coil::Slope s = slope_arg(o, o.slope2);
  const coil::Slope c = coil::canonical_coil_slope(s);
  const coil::Slope m = coil::mirror_slope(c);
  if (o.format == "json") {
    emit(o, dump(json{{"slope", s.str()}, {"canonical", c.str()}, {"mirror", m.str()}}));
  } else {
    emit(o, "slope=" + s.str() + " canonical=" + c.str() + " mirror=" + m.str() + "\n");
  }
  return 0;
}

int cmd_curve(const Options& o, const std::string& a, const std::string& b) {
  const coil::Slope s1 = coil::Slope::parse(a);
  const coil::Slope s2 = coil::Slope::parse(b);
  std::int64_t cc = 0, ac = 0;
  if (o.oracle) {
    cc = coil::brute_force_intersection(s1, s2, coil::IntersectionMode::CurveCurve, o.oracle_cap);
    ac = coil::brute_force_intersection(s1, s2, coil::IntersectionMode::ArcCurve, o.oracle_cap);
  } else {
    cc = coil::curve_curve_intersection(s1, s2);
    ac = coil::arc_curve_intersection(s1, s2);
  }
  if (!o.svg.empty()) write_file(o.svg, coil::render_curve_svg(coil::curve_coordinates(s1)));
  const std::string method = o.oracle ? "oracle" : "closed-form";
  if (o.format == "json") {
    emit(o, dump(json{{"first", s1.str()},
                      {"second", s2.str()},
                      {"curveCurve", cc},
                      {"arcCurve", ac},
                      {"method", method}}));
  } else {
    emit(o, "curve-curve=" + std::to_string(cc) + " arc-curve=" + std::to_string(ac) + " (" + method + ")\n");
  }
  return 0;
}

int cmd_gen(const Options& o) {
  coil::PlanarDiagram d;
  if (o.kind == "twobridge") {
    const auto c = o.cfrac.empty() ? coil::cfrac_expand(slope_arg(o, "")) : coil::ContinuedFraction::parse(o.cfrac);
    d = coil::gen_two_bridge(c);
  } else if (o.kind == "clasped") {
    d = coil::gen_clasped_two_bridge(slope_arg(o, ""));
  } else if (o.kind == "coil") {
    d = coil::gen_double_coil(spec_arg(o));
  } else if (o.kind == "augmented") {
    d = coil::gen_augmented(slope_arg(o, ""));
  } else {
    throw CLI::ValidationError("kind", "expected twobridge, clasped, coil or augmented");
  }
  if (!o.svg.empty()) write_file(o.svg, coil::render_svg(d, o.seed));
  const std::string pd = coil::emit_pd(d);
  if (o.format == "json") {
    json circles = json::array();
    for (const auto& c : d.provenance().circles) circles.push_back({{"name", c.name}, {"component", c.component}});
    emit(o, dump(json{{"family", std::string(coil::family_name(d.provenance().family))},
                      {"crossings", d.crossing_count()},
                      {"components", d.component_count()},
                      {"twistRegions", coil::twist_regions(d).count()},
                      {"generalizedTwistRegions", coil::generalized_twist_regions(d).count},
                      {"circles", circles},
                      {"pd", pd}}));
  } else {
    emit(o, pd + "\n");
  }
  return 0;
}

int cmd_bounds(const Options& o, bool spectral) {
  const coil::CoilSpec spec = spec_arg(o);
  if (o.format == "csv") {
    emit(o, coil::bounds_csv_header() + "\n" + coil::bounds_csv_row(spec, o.precision) + "\n");
    return 0;
  }
  const json j = coil::bounds_json(spec, o.precision);
  if (o.format == "json") {
    emit(o, dump(j));
    return 0;
  }
  const int dg = o.precision;
  std::ostringstream t;
  t << "spec " << spec.str() << " k=" << j["k"].get<std::int64_t>()
    << " certificate=" << j["certificate"]["condition"].get<std::string>() << "\n";
  if (!spectral) {
    t << "volume [" << coil::format_sig(j["volume"]["lower"].get<double>(), dg) << ", "
      << coil::format_sig(j["volume"]["upper"].get<double>(), dg) << ")\n";
  }
  t << "lambda1 [" << coil::format_sig(j["lambda"]["lower"].get<double>(), dg) << ", "
    << coil::format_sig(j["lambda"]["upper"].get<double>(), dg) << "]\n";
  emit(o, t.str());
  return 0;
}

int cmd_family(const Options& o) {
  if (o.config.empty()) throw CLI::ValidationError("config", "--config PATH is required");
  const coil::CoilFamily f = coil::CoilFamily::parse_config(read_file(o.config));
  coil::AnalyzeOptions ao;
  ao.jobs = o.jobs;
  const coil::FamilyReport r = coil::analyze_family(f, ao);
  if (o.format == "csv") {
    emit(o, coil::family_csv(r, o.precision));
  } else if (o.format == "json") {
    emit(o, dump(coil::family_json(r, o.precision)));
  } else {
    std::ostringstream t;
    t << coil::family_kind_name(f.kind) << ": " << r.rows.size() << " certified, " << r.uncertified.size()
      << " uncertified\n";
    if (r.summary) {
      t << "volume upper sup " << coil::format_sig(r.summary->sup_volume_upper, o.precision) << ", lambda1 lower inf "
        << coil::format_sig(r.summary->inf_lambda_lower, o.precision) << "\n";
    }
    t << "verdict " << (r.verdict ? coil::verdict_name(*r.verdict) : std::string("none")) << "\n";
    emit(o, t.str());
  }
  if (!r.verdict) throw coil::Error(coil::ErrorKind::NoCertifiedRows, "no member of the family has a certificate");
  return 0;
}

int report_checks(const Options& o, const std::vector<coil::CheckResult>& checks) {
  bool all = true;
  std::ostringstream t;
  json arr = json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    t << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  emit(o, o.format == "json" ? dump(json{{"checks", arr}, {"passed", all}}) : t.str());
  return all ? 0 : 1;
}

int cmd_verify(const Options& o) {
  if (!o.pd_path.empty()) return report_checks(o, coil::verify_diagram(coil::parse_pd(read_file(o.pd_path))));
  coil::VerifyOptions vo;
  vo.jobs = o.jobs;
  vo.oracle_cap = o.oracle_cap;
  return report_checks(o, coil::verify_suite(vo));
}

int cmd_render(const Options& o) {
  const coil::PlanarDiagram d = coil::parse_pd(read_file(o.pd_path));
  const std::string svg = coil::render_svg(d, o.seed);
  if (!o.svg.empty()) write_file(o.svg, svg);
  if (o.svg.empty() || !o.out.empty()) emit(o, svg);
  return 0;
}

void add_spec_flags(CLI::App* c, Options& o) {
  c->add_option("--p", o.p, "numerator p");
  c->add_option("--q", o.q, "denominator q");
  c->add_option("--n1", o.n1, "full twists in the first region");
  c->add_option("--n2", o.n2, "full twists in the second region");
  c->add_option("--slope", o.slope, "slope p/q");
}

void add_output_flags(CLI::App* c, Options& o, std::vector<std::string> formats) {
  c->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(formats)));
  c->add_option("--out", o.out, "write output to PATH");
  c->add_option("--precision", o.precision, "significant digits")->check(CLI::Range(1, coil::kMaxPrecision));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coilkit: double coil knots, 2-bridge links and their volume and spectral bounds"};
  app.require_subcommand(1);
  Options o;
  std::string curve_a, curve_b;

  auto* cfrac = app.add_subcommand("cfrac", "continued fraction of a slope in (0,1)");
  cfrac->add_option("SLOPE", o.slope2, "slope p/q");
  cfrac->add_option("--cfrac", o.cfrac, "evaluate [a1,...,ak] instead");
  add_spec_flags(cfrac, o);
  add_output_flags(cfrac, o, {"text", "json"});

  auto* slope = app.add_subcommand("slope", "canonical and mirror forms of a slope");
  slope->add_option("SLOPE", o.slope2, "slope p/q");
  add_spec_flags(slope, o);
  add_output_flags(slope, o, {"text", "json"});

  auto* curve = app.add_subcommand("curve", "intersection numbers of two slopes");
  curve->add_option("first", curve_a, "first slope (the arc in arc mode)")->required();
  curve->add_option("second", curve_b, "second slope")->required();
  curve->add_flag("--oracle", o.oracle, "count by brute force in the cover");
  curve->add_option("--oracle-cap", o.oracle_cap, "largest |p| or q the oracle accepts")->check(CLI::PositiveNumber);
  curve->add_option("--svg", o.svg, "draw the first curve to PATH");
  add_output_flags(curve, o, {"text", "json"});

  auto* gen = app.add_subcommand("gen", "generate a diagram as PD code");
  gen->add_option("kind", o.kind, "twobridge, clasped, coil or augmented")
      ->required()
      ->check(CLI::IsMember({"twobridge", "clasped", "coil", "augmented"}));
  gen->add_option("--cfrac", o.cfrac, "continued fraction for twobridge");
  gen->add_option("--svg", o.svg, "also write an SVG drawing");
  gen->add_option("--seed-layout", o.seed, "layout seed");
  add_spec_flags(gen, o);
  add_output_flags(gen, o, {"text", "json"});

  auto* bounds = app.add_subcommand("bounds", "volume bounds of a double coil knot");
  add_spec_flags(bounds, o);
  add_output_flags(bounds, o, {"json", "csv", "text"});
  auto* lambda = app.add_subcommand("lambda", "lambda_1 bounds of a double coil knot");
  add_spec_flags(lambda, o);
  add_output_flags(lambda, o, {"json", "csv", "text"});
  bounds->preparse_callback([&](std::size_t) { o.format = "json"; });
  lambda->preparse_callback([&](std::size_t) { o.format = "json"; });

  auto* family = app.add_subcommand("family", "analyze a family of double coil knots");
  family->add_option("--config", o.config, "family configuration file")->required();
  family->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  add_output_flags(family, o, {"json", "csv", "text"});
  family->preparse_callback([&](std::size_t) { o.format = "json"; });

  auto* verify = app.add_subcommand("verify", "run the oracle and property checks");
  verify->add_option("--pd", o.pd_path, "check one PD file instead");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--oracle-cap", o.oracle_cap, "largest |p| or q for the intersection oracle")
      ->check(CLI::Range(1, 40));
  add_output_flags(verify, o, {"text", "json"});

  auto* render = app.add_subcommand("render", "draw a PD file as SVG");
  render->add_option("pdfile", o.pd_path, "PD code file")->required();
  render->add_option("--svg", o.svg, "write the SVG to PATH");
  render->add_option("--seed-layout", o.seed, "layout seed");
  render->add_option("--out", o.out, "write the SVG to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cfrac) return cmd_cfrac(o);
    if (*slope) return cmd_slope(o);
    if (*curve) return cmd_curve(o, curve_a, curve_b);
    if (*gen) return cmd_gen(o);
    if (*bounds) return cmd_bounds(o, false);
    if (*lambda) return cmd_bounds(o, true);
    if (*family) return cmd_family(o);
    if (*verify) return cmd_verify(o);
    if (*render) return cmd_render(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const coil::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "IOError: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
