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

#include "hardylab/geometry/domain.hpp"

#include <cmath>
#include <limits>

namespace hardylab::geom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double hyp2(double x, double y) { return std::sqrt(x * x + y * y); }

void require_positive(double v, const char* what) {
  if (!(v > 0.0))
    throw Error(ErrorCode::ConfigInvalid, std::string(what) + " must be positive");
}

}  // namespace

void validate(const DomainSpec& domain) {
  std::visit(
      [](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) {
          require_positive(d.R, "disc radius");
        } else if constexpr (std::is_same_v<T, Annulus>) {
          require_positive(d.rho, "annulus inner radius");
          if (!(d.rho < d.R))
            throw Error(ErrorCode::ConfigInvalid, "annulus needs rho < R");
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          require_positive(d.a, "ellipse semi-axis a");
          require_positive(d.b, "ellipse semi-axis b");
        } else if constexpr (std::is_same_v<T, ExteriorDisc>) {
          require_positive(d.rho, "exterior disc radius");
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          require_positive(d.r, "cylinder radius");
          require_positive(d.half_height, "cylinder half height");
        } else if constexpr (std::is_same_v<T, Torus>) {
          require_positive(d.r_minor, "torus minor radius");
          if (!(d.R_major > d.r_minor))
            throw Error(ErrorCode::ConfigInvalid,
                        "ring torus needs R_major > r_minor");
        } else if constexpr (std::is_same_v<T, Hyperboloid>) {
          require_positive(d.s_max, "hyperboloid parameter truncation");
        } else if constexpr (std::is_same_v<T, ConformalAnnulus>) {
          conformal::validate(d.map);
        }
      },
      domain);
}

int dimension(const DomainSpec& domain) {
  return std::visit(
      [](const auto& d) -> int {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Cylinder> || std::is_same_v<T, Torus> ||
                      std::is_same_v<T, Hyperboloid>)
          return 3;
        else
          return 2;
      },
      domain);
}

std::string domain_name(const DomainSpec& domain) {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) return "disc";
        else if constexpr (std::is_same_v<T, Annulus>) return "annulus";
        else if constexpr (std::is_same_v<T, Ellipse>) return "ellipse";
        else if constexpr (std::is_same_v<T, ExteriorDisc>) return "exterior-disc";
        else if constexpr (std::is_same_v<T, Cylinder>) return "cylinder";
        else if constexpr (std::is_same_v<T, Torus>) return "torus";
        else if constexpr (std::is_same_v<T, Hyperboloid>) return "hyperboloid";
        else return "conformal-annulus";
      },
      domain);
}

double domain_scale(const DomainSpec& domain) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) return d.R;
        else if constexpr (std::is_same_v<T, Annulus>) return d.R;
        else if constexpr (std::is_same_v<T, Ellipse>) return std::max(d.a, d.b);
        else if constexpr (std::is_same_v<T, ExteriorDisc>) return d.rho;
        else if constexpr (std::is_same_v<T, Cylinder>)
          return std::max(d.r, d.half_height);
        else if constexpr (std::is_same_v<T, Torus>) return d.R_major;
        else if constexpr (std::is_same_v<T, Hyperboloid>)
          return std::max(1.0, d.s_max);
        else return conformal::bounding_radius(d.map);
      },
      domain);
}

bool contains(const DomainSpec& domain, const Point& x) {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) {
          return hyp2(x[0], x[1]) < d.R;
        } else if constexpr (std::is_same_v<T, Annulus>) {
          const double r = hyp2(x[0], x[1]);
          return r > d.rho && r < d.R;
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          const double u = x[0] / d.a, v = x[1] / d.b;
          return u * u + v * v < 1.0;
        } else if constexpr (std::is_same_v<T, ExteriorDisc>) {
          return hyp2(x[0], x[1]) > d.rho;
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          return hyp2(x[0], x[1]) < d.r;
        } else if constexpr (std::is_same_v<T, Torus>) {
          const double q = hyp2(x[0], x[1]) - d.R_major;
          return hyp2(q, x[2]) < d.r_minor;
        } else if constexpr (std::is_same_v<T, Hyperboloid>) {
          return x[0] * x[0] + x[1] * x[1] < 1.0 + x[2] * x[2];
        } else {
          return conformal::in_domain(d.map, {x[0], x[1]});
        }
      },
      domain);
}

double delta_sup(const DomainSpec& domain) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) return d.R;
        else if constexpr (std::is_same_v<T, Annulus>) return 0.5 * (d.R - d.rho);
        else if constexpr (std::is_same_v<T, Ellipse>) return std::min(d.a, d.b);
        else if constexpr (std::is_same_v<T, Cylinder>) return d.r;
        else if constexpr (std::is_same_v<T, Torus>) return d.r_minor;
        else return kInf;  // exterior disc, hyperboloid, conformal annulus
      },
      domain);
}

double ridge_floor(const DomainSpec& domain) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) return d.R;
        else if constexpr (std::is_same_v<T, Annulus>) return 0.5 * (d.R - d.rho);
        else if constexpr (std::is_same_v<T, Ellipse>) {
          const double lo = std::min(d.a, d.b), hi = std::max(d.a, d.b);
          return lo * lo / hi;  // reach at the flat vertices
        } else if constexpr (std::is_same_v<T, Cylinder>) return d.r;
        else if constexpr (std::is_same_v<T, Torus>) return d.r_minor;
        else if constexpr (std::is_same_v<T, Hyperboloid>) return 1.0;
        else return kInf;  // exterior disc (no ridge), conformal (not banded)
      },
      domain);
}

bool has_ridge(const DomainSpec& domain) {
  return !std::holds_alternative<ExteriorDisc>(domain);
}

std::vector<std::pair<std::string, double>> truncation_echo(
    const DomainSpec& domain) {
  std::vector<std::pair<std::string, double>> out;
  if (const auto* c = std::get_if<Cylinder>(&domain))
    out.emplace_back("half_height", c->half_height);
  if (const auto* h = std::get_if<Hyperboloid>(&domain))
    out.emplace_back("s_max", h->s_max);
  if (const auto* e = std::get_if<ExteriorDisc>(&domain))
    out.emplace_back("radial_extent_factor", 4.0 * e->rho);
  if (const auto* ca = std::get_if<ConformalAnnulus>(&domain))
    out.emplace_back("bounding_radius", conformal::bounding_radius(ca->map));
  return out;
}

int boundary_chart_count(const DomainSpec& domain) {
  if (std::holds_alternative<Annulus>(domain)) return 2;
  if (const auto* ca = std::get_if<ConformalAnnulus>(&domain))
    return conformal::boundary_loop_count(ca->map);
  return 1;
}

Point boundary_point(const DomainSpec& domain, const BoundaryParam& bp) {
  if (bp.chart < 0 || bp.chart >= boundary_chart_count(domain))
    throw Error(ErrorCode::ParameterOutOfRange, "invalid boundary chart");
  return std::visit(
      [&](const auto& d) -> Point {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) {
          return {d.R * std::cos(bp.u), d.R * std::sin(bp.u), 0.0};
        } else if constexpr (std::is_same_v<T, Annulus>) {
          const double r = bp.chart == 0 ? d.rho : d.R;
          return {r * std::cos(bp.u), r * std::sin(bp.u), 0.0};
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          return {d.a * std::cos(bp.u), d.b * std::sin(bp.u), 0.0};
        } else if constexpr (std::is_same_v<T, ExteriorDisc>) {
          return {d.rho * std::cos(bp.u), d.rho * std::sin(bp.u), 0.0};
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          return {d.r * std::cos(bp.u), d.r * std::sin(bp.u), bp.v};
        } else if constexpr (std::is_same_v<T, Torus>) {
          const double ring = d.R_major + d.r_minor * std::cos(bp.v);
          return {ring * std::cos(bp.u), ring * std::sin(bp.u),
                  d.r_minor * std::sin(bp.v)};
        } else if constexpr (std::is_same_v<T, Hyperboloid>) {
          const double w = std::sqrt(bp.u * bp.u + 1.0);
          return {w * std::cos(bp.v), w * std::sin(bp.v), bp.u};
        } else {
          const conformal::Complex z =
              conformal::boundary_loop_point(d.map, bp.chart, bp.u);
          return {z.real(), z.imag(), 0.0};
        }
      },
      domain);
}

Point inward_normal(const DomainSpec& domain, const BoundaryParam& bp) {
  if (bp.chart < 0 || bp.chart >= boundary_chart_count(domain))
    throw Error(ErrorCode::ParameterOutOfRange, "invalid boundary chart");
  return std::visit(
      [&](const auto& d) -> Point {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disc>) {
          return {-std::cos(bp.u), -std::sin(bp.u), 0.0};
        } else if constexpr (std::is_same_v<T, Annulus>) {
          const double sgn = bp.chart == 0 ? 1.0 : -1.0;
          return {sgn * std::cos(bp.u), sgn * std::sin(bp.u), 0.0};
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          const double nx = d.b * std::cos(bp.u), ny = d.a * std::sin(bp.u);
          const double len = hyp2(nx, ny);
          return {-nx / len, -ny / len, 0.0};
        } else if constexpr (std::is_same_v<T, ExteriorDisc>) {
          return {std::cos(bp.u), std::sin(bp.u), 0.0};
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          return {-std::cos(bp.u), -std::sin(bp.u), 0.0};
        } else if constexpr (std::is_same_v<T, Torus>) {
          return {-std::cos(bp.v) * std::cos(bp.u),
                  -std::cos(bp.v) * std::sin(bp.u), -std::sin(bp.v)};
        } else if constexpr (std::is_same_v<T, Hyperboloid>) {
          const double w = std::sqrt(bp.u * bp.u + 1.0);
          const double den = std::sqrt(2.0 * bp.u * bp.u + 1.0);
          return {-w * std::cos(bp.v) / den, -w * std::sin(bp.v) / den,
                  bp.u / den};
        } else {
          // Tangent by central differences, rotate, orient into the domain.
          const double h = 1e-6;
          const conformal::Complex zp =
              conformal::boundary_loop_point(d.map, bp.chart, bp.u + h);
          const conformal::Complex zm =
              conformal::boundary_loop_point(d.map, bp.chart, bp.u - h);
          conformal::Complex t = (zp - zm) / (2.0 * h);
          t /= std::abs(t);
          conformal::Complex nrm(-t.imag(), t.real());
          const conformal::Complex z0 =
              conformal::boundary_loop_point(d.map, bp.chart, bp.u);
          const double probe = 1e-6 * conformal::bounding_radius(d.map);
          if (!conformal::in_domain(d.map, z0 + probe * nrm)) nrm = -nrm;
          return {nrm.real(), nrm.imag(), 0.0};
        }
      },
      domain);
}

}  // namespace hardylab::geom
