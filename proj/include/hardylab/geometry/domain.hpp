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

#ifndef HARDYLAB_GEOMETRY_DOMAIN_HPP
#define HARDYLAB_GEOMETRY_DOMAIN_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hardylab/conformal/map.hpp"
#include "hardylab/core/types.hpp"

namespace hardylab::geom {

// Catalog of analytic domains. Each variant carries a boundary
// parametrization, an inward unit normal, and principal curvatures signed
// with respect to the inward normal: a convex boundary seen from inside has
// kappa_i <= 0, seen from outside kappa_i >= 0.

struct Disc {
  double R;
};

struct Annulus {
  double rho;
  double R;
};

struct Ellipse {
  double a;  // semi-axis along x
  double b;  // semi-axis along y
};

struct ExteriorDisc {
  double rho;
};

/// Infinite cylinder { x1^2 + x2^2 < r^2 } x R. half_height truncates
/// sampling and quadrature only; it is not part of the domain semantics.
struct Cylinder {
  double r;
  double half_height;
};

struct Torus {
  double R_major;
  double r_minor;
};

/// One-sheeted hyperboloid { x1^2 + x2^2 < 1 + x3^2 }. s_max truncates the
/// boundary parameter for sampling and quadrature only.
struct Hyperboloid {
  double s_max;
};

/// Planar domain carried onto an annulus by a closed-form univalent map.
struct ConformalAnnulus {
  conformal::MapSpec map;
};

using DomainSpec = std::variant<Disc, Annulus, Ellipse, ExteriorDisc, Cylinder,
                                Torus, Hyperboloid, ConformalAnnulus>;

/// Checks the variant invariants (positive lengths, rho < R, ring torus).
void validate(const DomainSpec& domain);

int dimension(const DomainSpec& domain);
std::string domain_name(const DomainSpec& domain);

/// Largest parameter length; sets the default finite-difference step.
double domain_scale(const DomainSpec& domain);

bool contains(const DomainSpec& domain, const Point& x);

/// sup of the boundary distance over the domain (infinity for unbounded).
double delta_sup(const DomainSpec& domain);

/// min over the ridge of delta(p) — bands below this stay clear of the
/// ridge along every inward normal. Infinite when the ridge is empty.
double ridge_floor(const DomainSpec& domain);

bool has_ridge(const DomainSpec& domain);

/// Quadrature/sampling truncation parameters echoed into reports.
std::vector<std::pair<std::string, double>> truncation_echo(
    const DomainSpec& domain);

/// Boundary chart coordinates. Domains with several boundary components (or
/// several loops per component) use one chart per loop; u is the primary
/// parameter, v the secondary one for surfaces.
struct BoundaryParam {
  int chart = 0;
  double u = 0.0;
  double v = 0.0;
};

int boundary_chart_count(const DomainSpec& domain);
Point boundary_point(const DomainSpec& domain, const BoundaryParam& bp);
Point inward_normal(const DomainSpec& domain, const BoundaryParam& bp);

}  // namespace hardylab::geom

#endif  // HARDYLAB_GEOMETRY_DOMAIN_HPP
