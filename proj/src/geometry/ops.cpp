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

#include "hardylab/geometry/ops.hpp"

#include <algorithm>
#include <cmath>

namespace hardylab::geom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTau = 2.0 * M_PI;

double hyp2(double x, double y) { return std::sqrt(x * x + y * y); }

void require_inside(const DomainSpec& domain, const Point& x,
                    const char* where) {
  if (!contains(domain, x))
    throw Error(ErrorCode::PointOutsideDomain, where);
}

double resolve_tol(double tol, double delta) {
  return tol > 0.0 ? tol : tol::near_point_gap(delta);
}

// Golden-section minimization on a bracket; the objectives are smooth squared
// distances, so this is accurate to the last few ulps of the parameter.
template <typename F>
double golden_min(F&& f, double lo, double hi, int iters = 90) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && (b - a) > 1e-15 * (1.0 + std::fabs(a)); ++i) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

struct Candidate {
  BoundaryParam param;
  Point y;
  double dist;
};

// Local minima of a periodic 1-d squared-distance profile, each refined on
// its coarse bracket.
template <typename PointOf>
void periodic_chart_minima(const PointOf& point_of, int chart, const Point& x,
                           int coarse, std::vector<Candidate>& out) {
  std::vector<double> g(coarse);
  for (int i = 0; i < coarse; ++i) {
    const Point y = point_of(chart, kTau * i / coarse);
    const Point dxy = y - x;
    g[i] = dot(dxy, dxy);
  }
  for (int i = 0; i < coarse; ++i) {
    const double prev = g[(i + coarse - 1) % coarse];
    const double next = g[(i + 1) % coarse];
    if (g[i] <= prev && g[i] <= next) {
      const double u0 = kTau * (i - 1) / coarse;
      const double u1 = kTau * (i + 1) / coarse;
      const double u = golden_min(
          [&](double t) {
            const Point y = point_of(chart, t);
            const Point dxy = y - x;
            return dot(dxy, dxy);
          },
          u0, u1);
      const Point y = point_of(chart, u);
      out.push_back({BoundaryParam{chart, std::fmod(u + kTau, kTau), 0.0}, y,
                     norm(y - x)});
    }
  }
}

// Merges duplicate refined minima and keeps everything within tol of the
// global minimum.
NearPointResult collect_candidates(std::vector<Candidate> cands,
                                   const Point& x, double tol_in) {
  if (cands.empty())
    throw Error(ErrorCode::FailedMinimization, "no boundary minimizer found");
  for (const Candidate& c : cands)
    if (!std::isfinite(c.dist))
      throw Error(ErrorCode::FailedMinimization, "non-finite boundary distance");
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.dist < b.dist; });
  const double delta = cands.front().dist;
  const double tol = resolve_tol(tol_in, delta);

  NearPointResult res;
  res.delta = delta;
  for (const Candidate& c : cands) {
    if (c.dist - delta > tol) break;
    bool dup = false;
    for (const auto& kept : res.near_points)
      if (norm(kept.y - c.y) < 1e-7 * (1.0 + delta)) dup = true;
    if (!dup) res.near_points.push_back({c.param, c.y});
  }
  res.multiplicity = res.near_points.size();
  if (res.multiplicity == 1 && delta > 0.0)
    res.grad_delta = (1.0 / delta) * (x - res.near_points[0].y);
  return res;
}

NearPointResult continuum_result(const DomainSpec& domain, double delta,
                                 std::vector<BoundaryParam> reps) {
  NearPointResult res;
  res.delta = delta;
  for (const BoundaryParam& bp : reps)
    res.near_points.push_back({bp, boundary_point(domain, bp)});
  res.multiplicity = NearPointResult::kContinuum;
  return res;
}

// Hyperboloid meridian profile: squared distance from (rho_c, z) in the
// half-plane to the meridian curve (sqrt(s^2+1), s).
double hyperboloid_meridian_minimum(double rho_c, double z, double s_range,
                                    double* s_out) {
  const auto g = [&](double s) {
    const double w = std::sqrt(s * s + 1.0);
    const double dr = w - rho_c;
    const double dz = s - z;
    return dr * dr + dz * dz;
  };
  const int coarse = 512;
  double best = kInf, best_s = 0.0;
  for (int i = 0; i <= coarse; ++i) {
    const double s = -s_range + 2.0 * s_range * i / coarse;
    const double v = g(s);
    if (v < best) { best = v; best_s = s; }
  }
  const double step = 2.0 * s_range / coarse;
  const double s = golden_min(g, best_s - step, best_s + step);
  *s_out = s;
  return std::sqrt(g(s));
}

}  // namespace

NearPointResult near_points(const DomainSpec& domain, const Point& x,
                            double tol) {
  require_inside(domain, x, "near_points");
  const double scale = domain_scale(domain);
  const double center_eps = 1e-12 * scale;

  if (const auto* d = std::get_if<Disc>(&domain)) {
    const double r = hyp2(x[0], x[1]);
    if (r < center_eps)
      return continuum_result(domain, d->R,
                              {{0, 0.0}, {0, M_PI_2}, {0, M_PI}, {0, 3 * M_PI_2}});
    const double u = std::atan2(x[1], x[0]);
    std::vector<Candidate> cands;
    cands.push_back({{0, u, 0.0}, {d->R * x[0] / r, d->R * x[1] / r, 0.0}, d->R - r});
    // Antipodal candidate matters only for points near the center.
    cands.push_back({{0, u + M_PI, 0.0},
                     {-d->R * x[0] / r, -d->R * x[1] / r, 0.0},
                     d->R + r});
    return collect_candidates(std::move(cands), x, tol);
  }

  if (const auto* d = std::get_if<Annulus>(&domain)) {
    const double r = hyp2(x[0], x[1]);
    const double u = std::atan2(x[1], x[0]);
    std::vector<Candidate> cands;
    cands.push_back({{0, u, 0.0}, {d->rho * x[0] / r, d->rho * x[1] / r, 0.0},
                     r - d->rho});
    cands.push_back({{1, u, 0.0}, {d->R * x[0] / r, d->R * x[1] / r, 0.0},
                     d->R - r});
    return collect_candidates(std::move(cands), x, tol);
  }

  if (const auto* d = std::get_if<ExteriorDisc>(&domain)) {
    const double r = hyp2(x[0], x[1]);
    const double u = std::atan2(x[1], x[0]);
    std::vector<Candidate> cands;
    cands.push_back({{0, u, 0.0}, {d->rho * x[0] / r, d->rho * x[1] / r, 0.0},
                     r - d->rho});
    return collect_candidates(std::move(cands), x, tol);
  }

  if (const auto* d = std::get_if<Cylinder>(&domain)) {
    const double r = hyp2(x[0], x[1]);
    if (r < center_eps)
      return continuum_result(
          domain, d->r,
          {{0, 0.0, x[2]}, {0, M_PI_2, x[2]}, {0, M_PI, x[2]}, {0, 3 * M_PI_2, x[2]}});
    const double u = std::atan2(x[1], x[0]);
    std::vector<Candidate> cands;
    cands.push_back({{0, u, x[2]},
                     {d->r * x[0] / r, d->r * x[1] / r, x[2]}, d->r - r});
    cands.push_back({{0, u + M_PI, x[2]},
                     {-d->r * x[0] / r, -d->r * x[1] / r, x[2]}, d->r + r});
    return collect_candidates(std::move(cands), x, tol);
  }

  if (const auto* d = std::get_if<Torus>(&domain)) {
    const double rc = hyp2(x[0], x[1]);
    const double q = rc - d->R_major;
    const double rt = hyp2(q, x[2]);
    const double phi = std::atan2(x[1], x[0]);
    if (rt < center_eps)
      return continuum_result(domain, d->r_minor,
                              {{0, phi, 0.0},
                               {0, phi, M_PI_2},
                               {0, phi, M_PI},
                               {0, phi, 3 * M_PI_2}});
    const double psi = std::atan2(x[2], q);
    std::vector<Candidate> cands;
    const auto tube_point = [&](double angle) -> Point {
      const double ring = d->R_major + d->r_minor * std::cos(angle);
      return {ring * std::cos(phi), ring * std::sin(phi),
              d->r_minor * std::sin(angle)};
    };
    cands.push_back({{0, phi, psi}, tube_point(psi), d->r_minor - rt});
    cands.push_back({{0, phi, psi + M_PI}, tube_point(psi + M_PI), d->r_minor + rt});
    return collect_candidates(std::move(cands), x, tol);
  }

  if (const auto* d = std::get_if<Hyperboloid>(&domain)) {
    const double rc = hyp2(x[0], x[1]);
    const double range = std::max(d->s_max, std::fabs(x[2]) + 3.0);
    if (rc < center_eps) {
      double s = 0.0;
      const double delta = hyperboloid_meridian_minimum(0.0, x[2], range, &s);
      return continuum_result(domain, delta,
                              {{0, s, 0.0}, {0, s, M_PI_2}, {0, s, M_PI},
                               {0, s, 3 * M_PI_2}});
    }
    const double az = std::atan2(x[1], x[0]);
    double s_near = 0.0, s_far = 0.0;
    const double d_near = hyperboloid_meridian_minimum(rc, x[2], range, &s_near);
    const double d_far = hyperboloid_meridian_minimum(-rc, x[2], range, &s_far);
    std::vector<Candidate> cands;
    const auto surf = [&](double s, double t) -> Point {
      const double w = std::sqrt(s * s + 1.0);
      return {w * std::cos(t), w * std::sin(t), s};
    };
    cands.push_back({{0, s_near, az}, surf(s_near, az), d_near});
    cands.push_back({{0, s_far, az + M_PI}, surf(s_far, az + M_PI), d_far});
    return collect_candidates(std::move(cands), x, tol);
  }

  // Ellipse and conformal annulus: coarse periodic sampling per chart plus
  // golden refinement.
  std::vector<Candidate> cands;
  const int charts = boundary_chart_count(domain);
  const auto point_of = [&](int chart, double u) {
    return boundary_point(domain, {chart, u, 0.0});
  };
  for (int c = 0; c < charts; ++c)
    periodic_chart_minima(point_of, c, x, 256, cands);
  return collect_candidates(std::move(cands), x, tol);
}

double distance(const DomainSpec& domain, const Point& x) {
  require_inside(domain, x, "distance");
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) {
          return d.R - hyp2(x[0], x[1]);
        } else if constexpr (std::is_same_v<T, Annulus>) {
          const double r = hyp2(x[0], x[1]);
          return std::min(r - d.rho, d.R - r);
        } else if constexpr (std::is_same_v<T, ExteriorDisc>) {
          return hyp2(x[0], x[1]) - d.rho;
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          return d.r - hyp2(x[0], x[1]);
        } else if constexpr (std::is_same_v<T, Torus>) {
          const double q = hyp2(x[0], x[1]) - d.R_major;
          return d.r_minor - hyp2(q, x[2]);
        } else if constexpr (std::is_same_v<T, Hyperboloid>) {
          const double rc = hyp2(x[0], x[1]);
          const double range = std::max(d.s_max, std::fabs(x[2]) + 3.0);
          double s = 0.0;
          return hyperboloid_meridian_minimum(rc, x[2], range, &s);
        } else {
          return near_points(domain, x).delta;
        }
      },
      domain);
}

std::vector<double> principal_curvatures(const DomainSpec& domain,
                                         const BoundaryParam& bp) {
  if (bp.chart < 0 || bp.chart >= boundary_chart_count(domain))
    throw Error(ErrorCode::ParameterOutOfRange, "invalid boundary chart");
  if (!std::isfinite(bp.u) || !std::isfinite(bp.v))
    throw Error(ErrorCode::ParameterOutOfRange, "non-finite boundary parameter");
  return std::visit(
      [&](const auto& d) -> std::vector<double> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) {
          return {-1.0 / d.R};
        } else if constexpr (std::is_same_v<T, Annulus>) {
          return {bp.chart == 0 ? 1.0 / d.rho : -1.0 / d.R};
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          const double su = std::sin(bp.u), cu = std::cos(bp.u);
          const double m = d.a * d.a * su * su + d.b * d.b * cu * cu;
          return {-d.a * d.b / (m * std::sqrt(m))};
        } else if constexpr (std::is_same_v<T, ExteriorDisc>) {
          return {1.0 / d.rho};
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          return {-1.0 / d.r, 0.0};
        } else if constexpr (std::is_same_v<T, Torus>) {
          const double cv = std::cos(bp.v);
          return {-1.0 / d.r_minor, -cv / (d.R_major + d.r_minor * cv)};
        } else if constexpr (std::is_same_v<T, Hyperboloid>) {
          const double w2 = 2.0 * bp.u * bp.u + 1.0;
          return {-1.0 / (w2 * std::sqrt(w2)), 1.0 / std::sqrt(w2)};
        } else {
          // Parametric curvature by central differences, oriented so the
          // inward normal convention holds.
          const double h = 1e-5;
          const auto pt = [&](double u) {
            return boundary_point(domain, {bp.chart, u, 0.0});
          };
          const Point zp = pt(bp.u + h), z0 = pt(bp.u), zm = pt(bp.u - h);
          const double xu = (zp[0] - zm[0]) / (2.0 * h);
          const double yu = (zp[1] - zm[1]) / (2.0 * h);
          const double xuu = (zp[0] - 2.0 * z0[0] + zm[0]) / (h * h);
          const double yuu = (zp[1] - 2.0 * z0[1] + zm[1]) / (h * h);
          const double speed = hyp2(xu, yu);
          const double kappa_left = (xu * yuu - yu * xuu) / (speed * speed * speed);
          const Point n = inward_normal(domain, bp);
          const double left_x = -yu / speed, left_y = xu / speed;
          const double sigma = (n[0] * left_x + n[1] * left_y) > 0.0 ? 1.0 : -1.0;
          return {-sigma * kappa_left};
        }
      },
      domain);
}

std::optional<double> ridge_clearance(const DomainSpec& domain, const Point& x) {
  return std::visit(
      [&](const auto& d) -> std::optional<double> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) {
          return hyp2(x[0], x[1]);
        } else if constexpr (std::is_same_v<T, Annulus>) {
          return std::fabs(hyp2(x[0], x[1]) - 0.5 * (d.rho + d.R));
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          double e, along, across;
          if (d.a >= d.b) {
            e = (d.a * d.a - d.b * d.b) / d.a;
            along = x[0]; across = x[1];
          } else {
            e = (d.b * d.b - d.a * d.a) / d.b;
            along = x[1]; across = x[0];
          }
          const double over = std::max(0.0, std::fabs(along) - e);
          return hyp2(over, across);
        } else if constexpr (std::is_same_v<T, ExteriorDisc>) {
          return kInf;
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          return hyp2(x[0], x[1]);
        } else if constexpr (std::is_same_v<T, Torus>) {
          const double q = hyp2(x[0], x[1]) - d.R_major;
          return hyp2(q, x[2]);
        } else if constexpr (std::is_same_v<T, Hyperboloid>) {
          return hyp2(x[0], x[1]);
        } else {
          return std::nullopt;
        }
      },
      domain);
}

CurvatureData curvature_at(const DomainSpec& domain, const Point& x) {
  const NearPointResult np = near_points(domain, x);
  if (np.multiplicity != 1)
    throw Error(ErrorCode::OnRidge, "curvature needs a unique near point");
  CurvatureData data;
  data.kappas = principal_curvatures(domain, np.near_points[0].param);
  for (double k : data.kappas) {
    const double denom = 1.0 + np.delta * k;
    if (!(denom > 0.0))
      throw Error(ErrorCode::OnRidge, "level surface degenerates (1+delta*kappa <= 0)");
    data.level_kappas.push_back(k / denom);
    data.kappa_tilde += k / denom;
  }
  return data;
}

RidgeVerdict is_near_ridge(const DomainSpec& domain, const Point& x,
                           double eps) {
  require_inside(domain, x, "is_near_ridge");
  RidgeVerdict v;
  v.distance_to_ridge = ridge_clearance(domain, x);
  if (!has_ridge(domain)) return v;
  const double delta = distance(domain, x);
  const NearPointResult np = near_points(domain, x, eps * delta);
  if (np.multiplicity >= 2) {
    v.on_ridge = true;
    v.reason = RidgeReason::Multiplicity;
    return v;
  }
  const std::vector<double> ks =
      principal_curvatures(domain, np.near_points[0].param);
  double min_denom = kInf;
  for (double k : ks) min_denom = std::min(min_denom, 1.0 + delta * k);
  if (min_denom <= eps) {
    v.on_ridge = true;
    v.reason = RidgeReason::CurvatureDegenerate;
  }
  return v;
}

double laplacian_distance(const DomainSpec& domain, const Point& x) {
  const RidgeVerdict v = is_near_ridge(domain, x);
  if (v.on_ridge)
    throw Error(ErrorCode::OnRidge, "distance is not twice differentiable here");
  return curvature_at(domain, x).kappa_tilde;
}

std::vector<double> level_surface_curvatures(const DomainSpec& domain,
                                             const Point& x) {
  const RidgeVerdict v = is_near_ridge(domain, x);
  if (v.on_ridge) throw Error(ErrorCode::OnRidge, "no level surface through ridge");
  return curvature_at(domain, x).level_kappas;
}

double laplacian_distance_fd(const DomainSpec& domain, const Point& x,
                             double h) {
  require_inside(domain, x, "laplacian_distance_fd");
  if (!(h > 0.0)) throw Error(ErrorCode::ConfigInvalid, "FD step must be positive");
  const double d0 = distance(domain, x);
  if (!(d0 > 3.0 * h))
    throw Error(ErrorCode::StencilLeavesDomain, "point too close to boundary");
  if (const std::optional<double> rc = ridge_clearance(domain, x)) {
    if (!(*rc > 3.0 * h))
      throw Error(ErrorCode::StencilCrossesRidge, "point too close to ridge");
  } else if (is_near_ridge(domain, x).on_ridge) {
    throw Error(ErrorCode::StencilCrossesRidge, "point too close to ridge");
  }
  const int n = dimension(domain);
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    Point xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    if (!contains(domain, xp) || !contains(domain, xm))
      throw Error(ErrorCode::StencilLeavesDomain, "stencil leaves the domain");
    acc += distance(domain, xp) - 2.0 * d0 + distance(domain, xm);
  }
  return acc / (h * h);
}

Point ridge_point(const DomainSpec& domain, const Point& x) {
  const NearPointResult np = near_points(domain, x);
  if (np.multiplicity != 1)
    throw Error(ErrorCode::OnRidge, "ridge_point needs a unique near point");
  const Point y = np.near_points[0].y;
  const double delta = np.delta;
  const Point u = (1.0 / delta) * (x - y);
  const double scale = domain_scale(domain);
  const double match_tol = 1e-6 * scale + 1e-9;
  const double t_cap = 64.0 * scale;

  const auto same_near = [&](double t) -> bool {
    const Point z = y + t * u;
    if (!contains(domain, z)) return false;
    const NearPointResult npz = near_points(domain, z);
    return npz.multiplicity == 1 && norm(npz.near_points[0].y - y) <= match_tol;
  };

  double t_lo = delta;
  double t_hi = delta;
  do {
    t_hi = std::max(1.3 * t_hi, t_hi + 0.02 * scale);
    if (t_hi > t_cap)
      throw Error(ErrorCode::MarchExceedsTruncation,
                  "inward ray never leaves the near-point cell");
    if (same_near(t_hi)) t_lo = t_hi;
  } while (t_lo == t_hi);

  for (int i = 0; i < 100 && (t_hi - t_lo) > 1e-12 * scale; ++i) {
    const double mid = 0.5 * (t_lo + t_hi);
    (same_near(mid) ? t_lo : t_hi) = mid;
  }
  return y + 0.5 * (t_lo + t_hi) * u;
}

Point sample_off_ridge(const DomainSpec& domain, util::Rng& rng,
                       double margin) {
  const double scale = domain_scale(domain);
  const double m = margin * scale;

  if (const auto* d = std::get_if<Disc>(&domain)) {
    const double s = rng.uniform(m, d->R - m);
    const double th = rng.uniform(0.0, kTau);
    return {s * std::cos(th), s * std::sin(th), 0.0};
  }
  if (const auto* d = std::get_if<Annulus>(&domain)) {
    const double mid = 0.5 * (d->rho + d->R);
    for (int i = 0; i < 100000; ++i) {
      const double s = rng.uniform(d->rho + m, d->R - m);
      if (std::fabs(s - mid) < m) continue;
      const double th = rng.uniform(0.0, kTau);
      return {s * std::cos(th), s * std::sin(th), 0.0};
    }
  }
  if (std::holds_alternative<Ellipse>(domain)) {
    const double reach = ridge_floor(domain);
    for (int i = 0; i < 100000; ++i) {
      const double t = rng.uniform(0.0, kTau);
      const double delta = rng.uniform(m, reach - m);
      const Point g = boundary_point(domain, {0, t, 0.0});
      const Point n = inward_normal(domain, {0, t, 0.0});
      const Point x = g + delta * n;
      if (contains(domain, x)) return x;
    }
  }
  if (const auto* d = std::get_if<ExteriorDisc>(&domain)) {
    const double s = rng.uniform(d->rho + m, 4.0 * d->rho);
    const double th = rng.uniform(0.0, kTau);
    return {s * std::cos(th), s * std::sin(th), 0.0};
  }
  if (const auto* d = std::get_if<Cylinder>(&domain)) {
    const double s = rng.uniform(m, d->r - m);
    const double th = rng.uniform(0.0, kTau);
    const double z = rng.uniform(-d->half_height, d->half_height);
    return {s * std::cos(th), s * std::sin(th), z};
  }
  if (const auto* d = std::get_if<Torus>(&domain)) {
    const double rt = rng.uniform(m, d->r_minor - m);
    const double phi = rng.uniform(0.0, kTau);
    const double psi = rng.uniform(0.0, kTau);
    const double ring = d->R_major + rt * std::cos(psi);
    return {ring * std::cos(phi), ring * std::sin(phi), rt * std::sin(psi)};
  }
  if (const auto* d = std::get_if<Hyperboloid>(&domain)) {
    const double s = rng.uniform(-0.8 * d->s_max, 0.8 * d->s_max);
    const double t = rng.uniform(0.0, kTau);
    const double w = std::sqrt(2.0 * s * s + 1.0);
    const double delta = rng.uniform(m, 0.6 * w);
    const Point g = boundary_point(domain, {0, s, t});
    const Point n = inward_normal(domain, {0, s, t});
    return g + delta * n;
  }
  if (std::get_if<ConformalAnnulus>(&domain) != nullptr) {
    const double box = scale;
    for (int i = 0; i < 100000; ++i) {
      const Point x = {rng.uniform(-box, box), rng.uniform(-box, box), 0.0};
      if (!contains(domain, x)) continue;
      if (distance(domain, x) < m) continue;
      if (is_near_ridge(domain, x, 0.05).on_ridge) continue;
      return x;
    }
  }
  throw Error(ErrorCode::SampleOutsideDomain, "off-ridge sampling failed");
}

}  // namespace hardylab::geom
