// Copyright 2026 the hardylab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front-end: select domain, inequality, exponent, profile, quadrature;
// run verification suites; emit machine-readable reports.
//
// Exit codes: 0 all assertions passed, 1 computation failure, 2 bad config.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hardylab/conformal/pullback.hpp"
#include "hardylab/geometry/ops.hpp"
#include "hardylab/hardy/verify.hpp"

namespace {

using namespace hardylab;
using hardy::Json;

constexpr int kExitPass = 0;
constexpr int kExitComputation = 1;
constexpr int kExitConfig = 2;

std::map<std::string, double> parse_kv(const std::string& spec,
                                       std::size_t colon) {
  std::map<std::string, double> kv;
  if (colon == std::string::npos) return kv;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ConfigInvalid, "expected key=value in: " + item);
    try {
      kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigInvalid, "bad number in: " + item);
    }
  }
  return kv;
}

double take(std::map<std::string, double>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end())
    throw Error(ErrorCode::ConfigInvalid, "missing parameter: " + key);
  const double v = it->second;
  kv.erase(it);
  return v;
}

double take_or(std::map<std::string, double>& kv, const std::string& key,
               double fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const double v = it->second;
  kv.erase(it);
  return v;
}

void expect_empty(const std::map<std::string, double>& kv,
                  const std::string& what) {
  if (!kv.empty())
    throw Error(ErrorCode::ConfigInvalid,
                "unknown parameter '" + kv.begin()->first + "' for " + what);
}

geom::DomainSpec parse_domain(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  auto kv = parse_kv(spec, colon);
  geom::DomainSpec out = geom::Disc{1.0};
  if (name == "disc") {
    out = geom::Disc{take(kv, "R")};
  } else if (name == "annulus") {
    out = geom::Annulus{take(kv, "rho"), take(kv, "R")};
  } else if (name == "ellipse") {
    out = geom::Ellipse{take(kv, "a"), take(kv, "b")};
  } else if (name == "exterior-disc") {
    out = geom::ExteriorDisc{take(kv, "rho")};
  } else if (name == "cylinder") {
    out = geom::Cylinder{take(kv, "r"), take_or(kv, "H", 1.0)};
  } else if (name == "torus") {
    out = geom::Torus{take(kv, "R"), take(kv, "r")};
  } else if (name == "hyperboloid") {
    out = geom::Hyperboloid{take_or(kv, "smax", 2.0)};
  } else if (name == "conformal-annulus") {
    out = geom::ConformalAnnulus{
        conformal::IdentityAnnulus{take(kv, "rho"), take(kv, "R")}};
  } else {
    throw Error(ErrorCode::ConfigInvalid, "unknown domain: " + name);
  }
  expect_empty(kv, name);
  geom::validate(out);
  return out;
}

conformal::MapSpec parse_map(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  auto kv = parse_kv(spec, colon);
  conformal::MapSpec out = conformal::IdentityAnnulus{1.0, 2.0};
  if (name == "identity-annulus") {
    out = conformal::IdentityAnnulus{take(kv, "rho"), take(kv, "R")};
  } else if (name == "sqrt-quadratic") {
    out = conformal::SqrtQuadratic{take(kv, "rho"), take(kv, "R")};
  } else {
    throw Error(ErrorCode::ConfigInvalid, "unknown map: " + name);
  }
  expect_empty(kv, name);
  conformal::validate(out);
  return out;
}

conformal::Transform parse_transform(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (name == "scale")
      return {conformal::TransformKind::Scale, std::stod(arg)};
    if (name == "rotation")
      return {conformal::TransformKind::Rotation, std::stod(arg)};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigInvalid, "bad transform parameter: " + arg);
  }
  if (name == "inversion") return {conformal::TransformKind::Inversion, 0.0};
  throw Error(ErrorCode::ConfigInvalid, "unknown transform: " + name);
}

Band parse_band(const std::string& spec, const std::string& side) {
  std::stringstream ss(spec);
  std::string a, b;
  if (!std::getline(ss, a, ',') || !std::getline(ss, b))
    throw Error(ErrorCode::ConfigInvalid, "band must be a,b");
  Band band;
  try {
    band.a = std::stod(a);
    band.b = std::stod(b);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigInvalid, "bad band: " + spec);
  }
  if (side == "auto") band.side = BandSide::Auto;
  else if (side == "inner") band.side = BandSide::Inner;
  else if (side == "outer") band.side = BandSide::Outer;
  else throw Error(ErrorCode::ConfigInvalid, "unknown band side: " + side);
  return band;
}

hardy::TestProfile parse_profile(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  if (name == "smooth-bump") return hardy::SmoothBump{};
  if (name == "power-bump") {
    auto kv = parse_kv(spec, colon);
    const double q = take_or(kv, "q", 0.5);
    expect_empty(kv, name);
    return hardy::PowerBump{q};
  }
  throw Error(ErrorCode::ConfigInvalid, "unknown profile: " + name);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::ConfigInvalid, "cannot open output file: " + path);
  out << content;
}

Json report_to_row_json(const hardy::HardyReport& r) { return to_json(r); }

std::string report_csv(const std::vector<hardy::HardyReport>& rows) {
  std::string csv = hardy::csv_row({"domain", "ineq", "p", "band_a", "band_b",
                                    "profile", "resolution", "lhs", "rhs",
                                    "ratio", "min_weight", "converged"});
  for (const auto& r : rows) {
    csv += hardy::csv_row(
        {r.domain, r.inequality, hardy::csv_number(r.p),
         hardy::csv_number(r.band.a), hardy::csv_number(r.band.b), r.profile,
         std::to_string(r.resolution), hardy::csv_number(r.lhs),
         hardy::csv_number(r.rhs), hardy::csv_number(r.ratio),
         hardy::csv_number(r.min_pointwise_weight),
         r.converged() ? "true" : "false"});
  }
  return csv;
}

struct CommonOpts {
  std::string domain;
  std::string ineq;
  double p = 2.0;
  std::string band = "0.1,0.6";
  std::string side = "auto";
  std::string profile = "smooth-bump";
  std::string scheme = "auto";
  int resolution = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

hardy::QuadratureSpec quad_of(const CommonOpts& o) {
  hardy::QuadratureSpec q;
  q.scheme = hardy::parse_scheme(o.scheme);
  q.resolution = o.resolution;
  q.seed = o.seed;
  hardy::validate(q);
  return q;
}

int run_verify(const CommonOpts& o) {
  const geom::DomainSpec domain = parse_domain(o.domain);
  const hardy::InequalitySpec spec{hardy::parse_ineq(o.ineq)};
  const hardy::Exponent p(o.p);
  const Band band = parse_band(o.band, o.side);
  const hardy::TestProfile profile = parse_profile(o.profile);
  const hardy::HardyReport rep =
      hardy::verify(spec, domain, p, profile, band, quad_of(o));

  Json config{{"domain", o.domain}, {"ineq", o.ineq},       {"p", o.p},
              {"band", o.band},     {"side", o.side},       {"profile", o.profile},
              {"scheme", o.scheme}, {"resolution", o.resolution}};
  if (o.format == "csv") {
    write_output(o.out, report_csv({rep}));
  } else {
    const Json envelope = hardy::report_envelope(
        "verify", config, o.seed, Json::array({report_to_row_json(rep)}),
        rep.passed);
    write_output(o.out, hardy::dump_report(envelope));
  }
  return rep.passed ? kExitPass : kExitComputation;
}

int run_constant(const CommonOpts& o, int budget) {
  const geom::DomainSpec domain = parse_domain(o.domain);
  const hardy::Exponent p(o.p);
  hardy::ConstantFamily family;
  family.budget = budget;
  const hardy::ConstantEstimate est =
      hardy::estimate_constant(domain, p, family, quad_of(o));
  Json config{{"domain", o.domain}, {"p", o.p}, {"budget", budget}};
  Json row{{"value", est.value},
           {"band", Json{{"a", est.band.a}, {"b", est.band.b}}},
           {"profile", est.profile},
           {"q", est.q},
           {"evals", est.evals},
           {"budget_exhausted", est.budget_exhausted},
           {"claim", "empirical upper bound; sharpness is never asserted"}};
  const bool passed = !est.budget_exhausted;
  const Json envelope = hardy::report_envelope("constant", config, o.seed,
                                               Json::array({row}), passed);
  write_output(o.out, hardy::dump_report(envelope));
  return passed ? kExitPass : kExitComputation;
}

int run_invariance(const std::string& map_str, const std::string& tf_str,
                   std::size_t samples, const CommonOpts& o) {
  const conformal::MapSpec map = parse_map(map_str);
  const conformal::Transform tf = parse_transform(tf_str);
  const double dev = conformal::invariance_check(map, tf, samples, o.seed);
  const bool passed = dev <= tol::frak_invariance;
  Json config{{"map", map_str}, {"transform", tf_str}, {"samples", samples}};
  Json row{{"max_deviation", dev},
           {"tolerance", tol::frak_invariance},
           {"passed", passed}};
  const Json envelope = hardy::report_envelope("invariance", config, o.seed,
                                               Json::array({row}), passed);
  write_output(o.out, hardy::dump_report(envelope));
  return passed ? kExitPass : kExitComputation;
}

int run_geometry_check(const CommonOpts& o, std::size_t samples) {
  const geom::DomainSpec domain = parse_domain(o.domain);
  util::Rng rng(o.seed);
  const double scale = geom::domain_scale(domain);
  const double h = tol::fd_h_factor * scale;
  const int dim = geom::dimension(domain);

  double max_eikonal = 0.0, max_grad_diff = 0.0, max_lap_diff = 0.0;
  double min_denom = std::numeric_limits<double>::infinity();
  std::size_t neg = 0, pos = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const Point x = geom::sample_off_ridge(domain, rng);
    const double d0 = geom::distance(domain, x);
    Point grad_fd{0.0, 0.0, 0.0};
    for (int j = 0; j < dim; ++j) {
      Point xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      grad_fd[j] = (geom::distance(domain, xp) - geom::distance(domain, xm)) /
                   (2.0 * h);
    }
    max_eikonal = std::max(max_eikonal, std::fabs(norm(grad_fd) - 1.0));
    const geom::NearPointResult np = geom::near_points(domain, x);
    const Point grad = (1.0 / d0) * (x - np.near_points[0].y);
    max_grad_diff = std::max(max_grad_diff, norm(grad_fd - grad));
    const double lap = geom::laplacian_distance(domain, x);
    const double lap_fd = geom::laplacian_distance_fd(domain, x, h);
    max_lap_diff = std::max(max_lap_diff, std::fabs(lap - lap_fd));
    (lap < 0.0 ? neg : pos) += 1;
    const geom::CurvatureData cd = geom::curvature_at(domain, x);
    for (double kap : cd.kappas) min_denom = std::min(min_denom, 1.0 + d0 * kap);
  }

  bool sign_ok = true;
  std::string sign_rule = "unconstrained";
  if (std::holds_alternative<geom::Disc>(domain) ||
      std::holds_alternative<geom::Ellipse>(domain) ||
      std::holds_alternative<geom::Cylinder>(domain)) {
    sign_rule = "laplacian <= 0 (convex interior)";
    sign_ok = pos == 0;
  } else if (std::holds_alternative<geom::ExteriorDisc>(domain)) {
    sign_rule = "laplacian >= 0 (convex complement)";
    sign_ok = neg == 0;
  } else if (const auto* t = std::get_if<geom::Torus>(&domain)) {
    if (t->R_major > 2.0 * t->r_minor) {
      sign_rule = "laplacian < 0 (ring torus)";
      sign_ok = pos == 0;
    }
  } else if (std::holds_alternative<geom::Hyperboloid>(domain)) {
    sign_rule = "laplacian changes sign";
    sign_ok = neg > 0 && pos > 0;
  }

  const bool eikonal_ok = max_eikonal <= 10.0 * h;
  const bool grad_ok = max_grad_diff <= 10.0 * h;
  const bool lap_ok = max_lap_diff <= 1e-4;
  const bool denom_ok = min_denom > 0.0;
  const bool passed = eikonal_ok && grad_ok && lap_ok && denom_ok && sign_ok;

  Json config{{"domain", o.domain}, {"samples", samples}};
  Json row{{"fd_step", h},
           {"max_eikonal_residual", max_eikonal},
           {"max_gradient_mismatch", max_grad_diff},
           {"max_laplacian_mismatch", max_lap_diff},
           {"min_level_denominator", min_denom},
           {"laplacian_negative_count", neg},
           {"laplacian_positive_count", pos},
           {"sign_rule", sign_rule},
           {"eikonal_ok", eikonal_ok},
           {"gradient_ok", grad_ok},
           {"laplacian_ok", lap_ok},
           {"denominator_ok", denom_ok},
           {"sign_ok", sign_ok}};
  const Json envelope = hardy::report_envelope("geometry-check", config, o.seed,
                                               Json::array({row}), passed);
  write_output(o.out, hardy::dump_report(envelope));
  return passed ? kExitPass : kExitComputation;
}

int run_sweep(const CommonOpts& o, const std::string& bands_str,
              const std::string& profiles_str, const std::string& res_str,
              const std::string& alphas_str, std::size_t fmt_samples) {
  const geom::DomainSpec domain = parse_domain(o.domain);
  const hardy::Ineq kind = hardy::parse_ineq(o.ineq);

  if (kind == hardy::Ineq::FMTComparison) {
    const auto alphas = split(alphas_str, ',');
    if (alphas.empty())
      throw Error(ErrorCode::ConfigInvalid, "fmt sweep needs --alphas");
    const auto* disc = std::get_if<geom::Disc>(&domain);
    if (disc == nullptr)
      throw Error(ErrorCode::ConfigInvalid, "fmt comparison runs on a disc");
    std::string csv = hardy::csv_row({"domain", "ineq", "alpha", "epsilon",
                                      "samples", "min_margin",
                                      "positive_radius", "passed"});
    bool all_passed = true;
    for (const std::string& a : alphas) {
      const hardy::FmtTable t =
          hardy::compare_fmt(std::stod(a), disc->R, fmt_samples);
      all_passed = all_passed && t.passed;
      csv += hardy::csv_row({o.domain, o.ineq, hardy::csv_number(t.alpha),
                             hardy::csv_number(t.epsilon),
                             std::to_string(t.rows.size()),
                             hardy::csv_number(t.min_margin),
                             hardy::csv_number(t.positive_radius),
                             t.passed ? "true" : "false"});
    }
    write_output(o.out, csv);
    return all_passed ? kExitPass : kExitComputation;
  }

  const auto bands = split(bands_str, ';');
  const auto profiles = split(profiles_str, ',');
  const auto resolutions = res_str.empty() ? std::vector<std::string>{"0"}
                                           : split(res_str, ',');
  if (bands.empty() || profiles.empty())
    throw Error(ErrorCode::ConfigInvalid, "sweep needs --bands and --profiles");

  struct Row {
    CommonOpts opts;
    hardy::HardyReport report;
    bool failed = false;
    std::string error;
  };
  std::vector<Row> rows;
  for (const std::string& b : bands)
    for (const std::string& pr : profiles)
      for (const std::string& res : resolutions) {
        Row row;
        row.opts = o;
        row.opts.band = b;
        row.opts.profile = pr;
        row.opts.resolution = std::stoi(res);
        rows.push_back(std::move(row));
      }

  const hardy::InequalitySpec spec{kind};
  const hardy::Exponent p(o.p);
  util::parallel_for(rows.size(), [&](std::size_t i) {
    Row& row = rows[i];
    try {
      row.report = hardy::verify(
          spec, domain, p, parse_profile(row.opts.profile),
          parse_band(row.opts.band, row.opts.side), quad_of(row.opts));
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
    }
  });

  // Deterministic row order regardless of evaluation interleaving.
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.opts.band, a.opts.profile, a.opts.resolution) <
           std::tie(b.opts.band, b.opts.profile, b.opts.resolution);
  });

  bool all_passed = true;
  std::vector<hardy::HardyReport> reports;
  for (const Row& row : rows) {
    if (row.failed) {
      all_passed = false;
      std::cerr << "sweep row failed (" << row.opts.band << ", "
                << row.opts.profile << "): " << row.error << "\n";
      continue;
    }
    all_passed = all_passed && row.report.passed;
    reports.push_back(row.report);
  }
  if (o.format == "json") {
    Json results = Json::array();
    for (const auto& r : reports) results.push_back(report_to_row_json(r));
    Json config{{"domain", o.domain},
                {"ineq", o.ineq},
                {"p", o.p},
                {"bands", bands_str},
                {"profiles", profiles_str},
                {"resolutions", res_str}};
    write_output(o.out, hardy::dump_report(hardy::report_envelope(
                            "sweep", config, o.seed, std::move(results),
                            all_passed)));
  } else {
    write_output(o.out, report_csv(reports));
  }
  return all_passed ? kExitPass : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hardylab: numerical verification of curvature-improved Hardy "
               "inequalities"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string map_str, transform_str;
  std::string bands_str, profiles_str, resolutions_str;
  std::string alphas_str = "-1.5,-1,0,1";
  std::size_t samples = 1000;
  std::size_t fmt_samples = 10000;
  int budget = 160;

  const auto add_common = [&](CLI::App* cmd, bool with_domain) {
    if (with_domain)
      cmd->add_option("--domain", o.domain, "domain spec, e.g. disc:R=1")
          ->required();
    cmd->add_option("--seed", o.seed, "deterministic seed");
    cmd->add_option("--out", o.out, "report path (default: stdout)");
    cmd->add_option("--quad", o.scheme, "quadrature scheme: auto|radial-1d|"
                                        "tensor-grid-midpoint|monte-carlo");
    cmd->add_option("--resolution", o.resolution, "per-axis resolution");
  };

  CLI::App* verify = app.add_subcommand("verify", "verify one inequality run");
  add_common(verify, true);
  verify->add_option("--ineq", o.ineq, "inequality tag")->required();
  verify->add_option("--p", o.p, "exponent (1, inf)");
  verify->add_option("--band", o.band, "support band a,b in delta units");
  verify->add_option("--side", o.side, "band side: auto|inner|outer");
  verify->add_option("--profile", o.profile, "test profile");
  verify->add_option("--format", o.format, "json|csv");

  CLI::App* constant =
      app.add_subcommand("constant", "empirical best-constant search");
  add_common(constant, true);
  constant->add_option("--p", o.p, "exponent");
  constant->add_option("--budget", budget, "quotient evaluation budget");

  CLI::App* invariance =
      app.add_subcommand("invariance", "conformal invariant deviation");
  add_common(invariance, false);
  invariance->add_option("--map", map_str, "map spec")->required();
  invariance->add_option("--transform", transform_str, "scale:s|rotation:t|inversion")
      ->required();
  invariance->add_option("--samples", samples, "sample count");

  CLI::App* sweep = app.add_subcommand("sweep", "cartesian sweep to CSV/JSON");
  add_common(sweep, true);
  sweep->add_option("--ineq", o.ineq, "inequality tag")->required();
  sweep->add_option("--p", o.p, "exponent");
  sweep->add_option("--side", o.side, "band side");
  sweep->add_option("--bands", bands_str, "semicolon list: a,b;a,b;...");
  sweep->add_option("--profiles", profiles_str, "comma list of profiles");
  sweep->add_option("--resolutions", resolutions_str, "comma list");
  sweep->add_option("--alphas", alphas_str, "fmt-comparison alpha list");
  sweep->add_option("--fmt-samples", fmt_samples, "fmt-comparison samples");
  sweep->add_option("--format", o.format, "json|csv");

  CLI::App* gcheck =
      app.add_subcommand("geometry-check", "distance-field oracle suite");
  add_common(gcheck, true);
  gcheck->add_option("--samples", samples, "off-ridge sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (verify->parsed()) return run_verify(o);
    if (constant->parsed()) return run_constant(o, budget);
    if (invariance->parsed())
      return run_invariance(map_str, transform_str, samples, o);
    if (sweep->parsed())
      return run_sweep(o, bands_str, profiles_str, resolutions_str, alphas_str,
                       fmt_samples);
    if (gcheck->parsed()) return run_geometry_check(o, samples);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::ConfigInvalid ? kExitConfig
                                                : kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitConfig;
}
