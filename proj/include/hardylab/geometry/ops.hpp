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

#ifndef HARDYLAB_GEOMETRY_OPS_HPP
#define HARDYLAB_GEOMETRY_OPS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hardylab/core/util.hpp"
#include "hardylab/geometry/domain.hpp"

namespace hardylab::geom {

/// Distance from x to the boundary. Closed form where available; otherwise
/// coarse boundary sampling plus local refinement.
double distance(const DomainSpec& domain, const Point& x);

struct NearPointResult {
  /// Marks a continuum of minimizers (disc center, cylinder axis, torus
  /// center circle); near_points then holds representatives.
  static constexpr std::size_t kContinuum =
      std::numeric_limits<std::size_t>::max();

  struct Entry {
    BoundaryParam param;
    Point y;
  };

  double delta = 0.0;
  std::vector<Entry> near_points;
  std::size_t multiplicity = 0;
  std::optional<Point> grad_delta;  // (x - y)/|x - y|, only when unique
};

/// All boundary minimizers of |y - x| within tol of the global minimum.
/// Passing tol <= 0 selects the default gap max(1e-9, 1e-7*delta).
NearPointResult near_points(const DomainSpec& domain, const Point& x,
                            double tol = -1.0);

/// Principal curvatures at a boundary point, inward-normal sign convention.
std::vector<double> principal_curvatures(const DomainSpec& domain,
                                         const BoundaryParam& bp);

struct CurvatureData {
  std::vector<double> kappas;        // boundary curvatures at the near point
  std::vector<double> level_kappas;  // kappa_i / (1 + delta*kappa_i)
  double kappa_tilde = 0.0;          // sum of level_kappas (= laplacian)
};

CurvatureData curvature_at(const DomainSpec& domain, const Point& x);

/// Laplacian of the distance field at x, via near-point curvatures.
double laplacian_distance(const DomainSpec& domain, const Point& x);

/// Independent second-order central-difference Laplacian of distance().
double laplacian_distance_fd(const DomainSpec& domain, const Point& x,
                             double h);

/// Curvatures of the level surface of the distance field through x.
std::vector<double> level_surface_curvatures(const DomainSpec& domain,
                                             const Point& x);

enum class RidgeReason { Multiplicity, CurvatureDegenerate, Clear };

struct RidgeVerdict {
  bool on_ridge = false;
  RidgeReason reason = RidgeReason::Clear;
  std::optional<double> distance_to_ridge;
};

RidgeVerdict is_near_ridge(const DomainSpec& domain, const Point& x,
                           double eps = tol::ridge_eps);

/// Farthest point along the inward ray from the near point of x that still
/// has the same unique near point.
Point ridge_point(const DomainSpec& domain, const Point& x);

/// Closed-form distance from x to the ridge where the catalog provides one.
std::optional<double> ridge_clearance(const DomainSpec& domain, const Point& x);

/// Random interior point with clearance margin*scale from both the boundary
/// and the ridge; used by the oracle and sign suites.
Point sample_off_ridge(const DomainSpec& domain, util::Rng& rng,
                       double margin = 0.05);

}  // namespace hardylab::geom

#endif  // HARDYLAB_GEOMETRY_OPS_HPP
