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

#include "hardylab/hardy/profile.hpp"

#include <algorithm>
#include <cmath>

#include "hardylab/geometry/ops.hpp"

namespace hardylab::hardy {

namespace {

// exp(4 - 1/(t(1-t))), normalized to peak 1 at t = 1/2. Below this floor the
// exponential underflows anyway.
constexpr double kBumpEdge = 1e-3;

double bump_value(double t) {
  if (t <= kBumpEdge || t >= 1.0 - kBumpEdge) return 0.0;
  return std::exp(4.0 - 1.0 / (t * (1.0 - t)));
}

double bump_deriv(double t) {
  if (t <= kBumpEdge || t >= 1.0 - kBumpEdge) return 0.0;
  const double w = t * (1.0 - t);
  return bump_value(t) * (1.0 - 2.0 * t) / (w * w);
}

// smootherstep: C^2 ramp with vanishing slope and curvature at both ends.
double ramp(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double ramp_deriv(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 30.0 * t * t * (1.0 - t) * (1.0 - t);
}

constexpr double kRampFraction = 0.15;

}  // namespace

std::string profile_name(const TestProfile& profile) {
  if (std::holds_alternative<SmoothBump>(profile)) return "smooth-bump";
  if (const auto* p = std::get_if<PowerBump>(&profile))
    return "power-bump(q=" + std::to_string(p->q) + ")";
  return "radial-custom";
}

Pchip::Pchip(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t n = xs_.size();
  if (n < 2 || ys_.size() != n)
    throw Error(ErrorCode::ConfigInvalid, "interpolation table needs >= 2 rows");
  for (std::size_t i = 1; i < n; ++i)
    if (!(xs_[i] > xs_[i - 1]))
      throw Error(ErrorCode::ConfigInvalid, "table abscissae must increase");

  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = xs_[i + 1] - xs_[i];
    d[i] = (ys_[i + 1] - ys_[i]) / h[i];
  }
  slopes_.assign(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      slopes_[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  const auto end_slope = [](double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::fabs(m) > 3.0 * std::fabs(d0)) return 3.0 * d0;
    return m;
  };
  if (n == 2) {
    slopes_[0] = slopes_[1] = d[0];
  } else {
    slopes_[0] = end_slope(h[0], h[1], d[0], d[1]);
    slopes_[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  }
}

double Pchip::value(double x) const {
  if (x <= xs_.front() || x >= xs_.back()) return 0.0;
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const double h = xs_[i + 1] - xs_[i];
  const double t = (x - xs_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return ys_[i] * (2.0 * t3 - 3.0 * t2 + 1.0) +
         h * slopes_[i] * (t3 - 2.0 * t2 + t) +
         ys_[i + 1] * (-2.0 * t3 + 3.0 * t2) + h * slopes_[i + 1] * (t3 - t2);
}

double Pchip::deriv(double x) const {
  if (x <= xs_.front() || x >= xs_.back()) return 0.0;
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const double h = xs_[i + 1] - xs_[i];
  const double t = (x - xs_[i]) / h;
  const double t2 = t * t;
  return (ys_[i] * (6.0 * t2 - 6.0 * t) + h * slopes_[i] * (3.0 * t2 - 4.0 * t + 1.0) +
          ys_[i + 1] * (6.0 * t - 6.0 * t2) + h * slopes_[i + 1] * (3.0 * t2 - 2.0 * t)) /
         h;
}

TestFunction::TestFunction(TestProfile profile, Band band)
    : profile_(std::move(profile)), band_(band) {
  if (const auto* rc = std::get_if<RadialCustom>(&profile_)) {
    // Map the table affinely onto the band.
    if (rc->deltas.size() != rc->values.size() || rc->deltas.size() < 2)
      throw Error(ErrorCode::ConfigInvalid, "radial-custom table malformed");
    const double lo = rc->deltas.front(), hi = rc->deltas.back();
    if (!(hi > lo))
      throw Error(ErrorCode::ConfigInvalid, "radial-custom table malformed");
    std::vector<double> xs(rc->deltas.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      xs[i] = band_.a + (rc->deltas[i] - lo) / (hi - lo) * band_.width();
    table_ = std::make_shared<const Pchip>(std::move(xs), rc->values);
  }
}

double TestFunction::value(double d) const {
  if (d <= band_.a || d >= band_.b) return 0.0;
  if (std::holds_alternative<SmoothBump>(profile_))
    return bump_value((d - band_.a) / band_.width());
  if (const auto* pb = std::get_if<PowerBump>(&profile_)) {
    const double w = kRampFraction * band_.width();
    const double m = ramp((d - band_.a) / w) * ramp((band_.b - d) / w);
    return std::pow(d / band_.b, pb->q) * m;
  }
  return table_->value(d);
}

double TestFunction::deriv(double d) const {
  if (d <= band_.a || d >= band_.b) return 0.0;
  if (std::holds_alternative<SmoothBump>(profile_))
    return bump_deriv((d - band_.a) / band_.width()) / band_.width();
  if (const auto* pb = std::get_if<PowerBump>(&profile_)) {
    const double w = kRampFraction * band_.width();
    const double up = ramp((d - band_.a) / w);
    const double dn = ramp((band_.b - d) / w);
    const double dup = ramp_deriv((d - band_.a) / w) / w;
    const double ddn = -ramp_deriv((band_.b - d) / w) / w;
    const double pow_val = std::pow(d / band_.b, pb->q);
    const double pow_der = pb->q * pow_val / d;
    return pow_der * up * dn + pow_val * (dup * dn + up * ddn);
  }
  return table_->deriv(d);
}

double TestFunction::value_at(const geom::DomainSpec& domain,
                              const Point& x) const {
  return value(band_distance(domain, x, band_.side));
}

double band_distance(const geom::DomainSpec& domain, const Point& x,
                     BandSide side) {
  if (side == BandSide::Auto) return geom::distance(domain, x);
  const auto* an = std::get_if<geom::Annulus>(&domain);
  if (an == nullptr)
    throw Error(ErrorCode::ConfigInvalid, "band side requires an annulus");
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
  return side == BandSide::Inner ? r - an->rho : an->R - r;
}

TestFunction make_test_function(const TestProfile& profile,
                                const geom::DomainSpec& domain,
                                const Band& band) {
  if (!(band.a < band.b))
    throw Error(ErrorCode::BandEmpty, "band needs a < b");
  if (!(band.a > 0.0))
    throw Error(ErrorCode::BandEmpty, "band must start inside the domain (a > 0)");
  const double sup = geom::delta_sup(domain);
  if (band.a >= sup)
    throw Error(ErrorCode::BandEmpty, "band lies beyond sup delta");

  if (band.side == BandSide::Auto) {
    // f = eta(min-side distance) is only C^1 if it dies before the ridge.
    if (geom::has_ridge(domain) && band.b >= geom::ridge_floor(domain))
      throw Error(ErrorCode::BandTouchesRidge,
                  "band reaches the ridge; shrink b or use a one-sided band");
  } else {
    const auto* an = std::get_if<geom::Annulus>(&domain);
    if (an == nullptr)
      throw Error(ErrorCode::ConfigInvalid, "band side requires an annulus");
    if (band.b >= an->R - an->rho)
      throw Error(ErrorCode::BandEmpty,
                  "one-sided band must end before the opposite boundary");
  }
  return TestFunction(profile, band);
}

}  // namespace hardylab::hardy
