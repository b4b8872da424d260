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

#include "hardylab/conformal/pullback.hpp"

#include <cmath>
#include <vector>

#include "hardylab/core/util.hpp"
#include "hardylab/simd/kernels.hpp"

namespace hardylab::conformal {

namespace {

constexpr double kTau = 2.0 * M_PI;

const MapSpec& root_of(const MapSpec& m) {
  const MapSpec* cur = &m;
  while (const auto* c = std::get_if<Composed>(cur)) cur = c->base.get();
  return *cur;
}

double annulus_band_distance(double abs_f, double rho, double R) {
  return std::min(abs_f - rho, R - abs_f);
}

double frak_from_fields(const AbsFields& f, double rho, double R) {
  const double inv_sum = 1.0 / (f.abs_f - rho) + 1.0 / (R - f.abs_f);
  return -f.abs_fprime_sq / (f.abs_f * f.abs_f) +
         f.abs_fprime_sq * inv_sum * inv_sum;
}

// Annulus-side integrals: u = eta(annulus distance) on the target annulus.
void annulus_side(double rho, double R, const hardy::TestFunction& u, int res,
                  double* lhs, double* rhs) {
  const Band& band = u.band();
  const auto piecewise = [&](const std::function<double(double, double)>& g) {
    double total = 0.0;
    for (const auto& [lo, hi] : {std::pair{rho + band.a, rho + band.b},
                                 std::pair{R - band.b, R - band.a}}) {
      total += hardy::integrate_interval(lo, hi, res, [&](double s) {
        return g(s, annulus_band_distance(s, rho, R)) * kTau * s;
      });
    }
    return total;
  };
  *lhs = piecewise([&](double, double d) {
    const double du = u.deriv(d);
    return du * du;
  });
  *rhs = piecewise([&](double s, double d) {
    const double inv_sum = 1.0 / (s - rho) + 1.0 / (R - s);
    const double frak = -1.0 / (s * s) + inv_sum * inv_sum;
    const double uv = u.value(d);
    return 0.25 * frak * uv * uv;
  });
}

// x-side for maps whose root domain is an annulus: every field depends on
// |z| only, so a radial reduction over the root annulus is exact.
void x_side_radial(const MapSpec& map, double rho, double R,
                   const hardy::TestFunction& u, int res, double* lhs,
                   double* rhs) {
  const auto [rho0, R0] = annulus_radii(root_of(map));
  const auto integrand = [&](double s, bool rhs_side) {
    const AbsFields f = map_abs_fields(map, Complex(s, 0.0));
    const double d = annulus_band_distance(f.abs_f, rho, R);
    if (rhs_side) {
      const double uv = u.value(d);
      if (uv == 0.0) return 0.0;
      return 0.25 * frak_from_fields(f, rho, R) * uv * uv;
    }
    const double du = u.deriv(d);
    if (du == 0.0) return 0.0;
    return du * du * f.abs_fprime_sq;
  };
  *lhs = hardy::integrate_interval(
      rho0, R0, res, [&](double s) { return integrand(s, false) * kTau * s; });
  *rhs = hardy::integrate_interval(
      rho0, R0, res, [&](double s) { return integrand(s, true) * kTau * s; });
}

// x-side for sqrt-quadratic roots: Cartesian midpoint grid over the bounding
// square; the level value and conformal factor come from the batch kernel.
void x_side_grid(const MapSpec& map, double rho, double R,
                 const hardy::TestFunction& u, int res, double* lhs,
                 double* rhs) {
  const double box = bounding_radius(root_of(map));
  const double h = 2.0 * box / res;
  const auto& K = simd::kernels();

  std::vector<double> lhs_cells(static_cast<std::size_t>(res) * res, 0.0);
  std::vector<double> rhs_cells(lhs_cells.size(), 0.0);
  util::parallel_for(static_cast<std::size_t>(res), [&](std::size_t row) {
    const double y = -box + (static_cast<double>(row) + 0.5) * h;
    std::vector<double> re(res), im(res, y), cval(res), fp2(res);
    for (int i = 0; i < res; ++i) re[i] = -box + (i + 0.5) * h;
    K.cassini_fields(re.data(), im.data(), cval.data(), fp2.data(), res);
    // Transforms applied root-outward on the magnitudes.
    std::vector<Transform> chain;
    for (const MapSpec* cur = &map; const auto* c = std::get_if<Composed>(cur);
         cur = c->base.get())
      chain.push_back(c->transform);
    for (int i = 0; i < res; ++i) {
      AbsFields f{cval[i], fp2[i]};
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        switch (it->kind) {
          case TransformKind::Scale: {
            const double sfac = it->parameter;
            f = {sfac * f.abs_f, sfac * sfac * f.abs_fprime_sq};
            break;
          }
          case TransformKind::Rotation:
            break;
          case TransformKind::Inversion: {
            const double f2 = f.abs_f * f.abs_f;
            f = {1.0 / f.abs_f, f.abs_fprime_sq / (f2 * f2)};
            break;
          }
        }
      }
      const double d = annulus_band_distance(f.abs_f, rho, R);
      if (d <= u.band().a || d >= u.band().b) continue;
      const double du = u.deriv(d);
      const double uv = u.value(d);
      lhs_cells[row * res + i] = du * du * f.abs_fprime_sq * h * h;
      rhs_cells[row * res + i] =
          0.25 * frak_from_fields(f, rho, R) * uv * uv * h * h;
    }
  });
  *lhs = util::pairwise_sum(lhs_cells);
  *rhs = util::pairwise_sum(rhs_cells);
}

}  // namespace

PullbackReport pullback_verify(const MapSpec& map,
                               const hardy::TestProfile& profile,
                               const Band& band,
                               const hardy::QuadratureSpec& quad) {
  validate(map);
  hardy::validate(quad);
  if (band.side != BandSide::Auto)
    throw Error(ErrorCode::ConfigInvalid,
                "pullback bands follow the annulus distance (side auto)");
  const auto [rho, R] = annulus_radii(map);
  if (!(band.a > 0.0 && band.a < band.b))
    throw Error(ErrorCode::BandEmpty, "band needs 0 < a < b");
  if (band.b >= 0.5 * (R - rho))
    throw Error(ErrorCode::BandTouchesRidge,
                "band reaches the annulus midradius circle");

  const bool sqrtq_root = std::holds_alternative<SqrtQuadratic>(root_of(map));
  const int res = quad.resolution != 0 ? quad.resolution
                                       : (sqrtq_root ? 512 : 4096);
  const hardy::TestFunction u(profile, band);

  const auto eval_all = [&](int r, double out[4]) {
    annulus_side(rho, R, u, r, &out[0], &out[1]);
    if (sqrtq_root)
      x_side_grid(map, rho, R, u, r, &out[2], &out[3]);
    else
      x_side_radial(map, rho, R, u, r, &out[2], &out[3]);
  };

  double coarse[4], fine[4];
  eval_all(res, coarse);
  eval_all(2 * res, fine);

  PullbackReport rep;
  rep.map = map_name(map);
  rep.profile = hardy::profile_name(profile);
  rep.band = band;
  rep.resolution = res;
  rep.lhs_y = fine[0];
  rep.rhs_y = fine[1];
  rep.lhs_x = fine[2];
  rep.rhs_x = fine[3];
  rep.converged = true;
  for (int i = 0; i < 4; ++i) {
    const double scale = std::max(std::fabs(fine[i]), 1e-300);
    if (std::fabs(fine[i] - coarse[i]) / scale > tol::quad_rel)
      rep.converged = false;
  }
  rep.ratio = rep.rhs_x != 0.0 ? rep.lhs_x / rep.rhs_x
                               : (rep.lhs_x == 0.0 ? 1.0 : 0.0);
  rep.cov_lhs_rel =
      std::fabs(rep.lhs_x - rep.lhs_y) / std::max(std::fabs(rep.lhs_y), 1e-300);
  rep.cov_rhs_rel =
      std::fabs(rep.rhs_x - rep.rhs_y) / std::max(std::fabs(rep.rhs_y), 1e-300);
  rep.branch_cut = branch_scan(map, 256).discontinuity_found;

  const bool zero_profile = rep.lhs_x == 0.0 && rep.rhs_x == 0.0;
  const bool ratio_ok =
      zero_profile || (rep.rhs_x > 0.0 && rep.ratio >= 1.0 - tol::ratio_slack);
  const bool cov_ok =
      zero_profile || (rep.cov_lhs_rel <= tol::quad_rel && rep.cov_rhs_rel <= tol::quad_rel);
  rep.passed = rep.converged && ratio_ok && cov_ok;
  return rep;
}

}  // namespace hardylab::conformal
