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

#ifndef HARDYLAB_HARDY_PROFILE_HPP
#define HARDYLAB_HARDY_PROFILE_HPP

#include <string>
#include <variant>
#include <vector>

#include "hardylab/geometry/domain.hpp"

namespace hardylab::hardy {

/// eta(t) = exp(-1/(t(1-t))) rescaled to the band; vanishes to all orders at
/// both ends.
struct SmoothBump {};

/// delta^q shaped profile with smooth ramps at the band ends; q near
/// (p-1)/p drives the plain Hardy quotient toward the sharp constant.
struct PowerBump {
  double q = 0.5;
};

/// Tabulated profile interpolated by a monotone cubic; tables should start
/// and end with repeated zeros so value and slope vanish at the band ends.
struct RadialCustom {
  std::vector<double> deltas;
  std::vector<double> values;
};

using TestProfile = std::variant<SmoothBump, PowerBump, RadialCustom>;

std::string profile_name(const TestProfile& profile);

/// Fritsch-Carlson monotone cubic interpolation.
class Pchip {
 public:
  Pchip(std::vector<double> xs, std::vector<double> ys);

  double value(double x) const;
  double deriv(double x) const;

 private:
  std::vector<double> xs_, ys_, slopes_;
};

/// Radial profile f = eta(d(x)) where d is the selected boundary distance.
/// value/deriv are functions of the distance; off the ridge the gradient of
/// f along grad(d) is deriv(d) since |grad d| = 1.
class TestFunction {
 public:
  TestFunction(TestProfile profile, Band band);

  double value(double d) const;
  double deriv(double d) const;

  const Band& band() const { return band_; }
  const TestProfile& profile() const { return profile_; }

  /// Evaluates f at a domain point (band side resolved on the annulus).
  double value_at(const geom::DomainSpec& domain, const Point& x) const;

 private:
  TestProfile profile_;
  Band band_;
  std::shared_ptr<const Pchip> table_;  // RadialCustom only
};

/// Distance driving the profile: min-side distance for Auto bands, the
/// single-component distance for Inner/Outer bands on the annulus.
double band_distance(const geom::DomainSpec& domain, const Point& x,
                     BandSide side);

/// Builds the profile on the band after validating it against the domain:
/// empty or reversed bands, bands beyond sup delta, and Auto bands reaching
/// the ridge are rejected.
TestFunction make_test_function(const TestProfile& profile,
                                const geom::DomainSpec& domain,
                                const Band& band);

}  // namespace hardylab::hardy

#endif  // HARDYLAB_HARDY_PROFILE_HPP
