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

#include "hardylab/hardy/inequality.hpp"

#include <cmath>

namespace hardylab::hardy {

namespace {

double hyp2(double x, double y) { return std::sqrt(x * x + y * y); }

void require_admissible(Ineq kind, const geom::DomainSpec& domain) {
  if (!admits(kind, domain))
    throw Error(ErrorCode::DomainVariantMismatch,
                std::string(ineq_name(kind)) + " on " + geom::domain_name(domain));
}

}  // namespace

const char* ineq_name(Ineq kind) {
  switch (kind) {
    case Ineq::GeneralRidge: return "general-ridge";
    case Ineq::CurvatureRidge: return "curvature-ridge";
    case Ineq::ConvexImproved: return "convex-improved";
    case Ineq::BallImproved: return "ball-improved";
    case Ineq::QuadraticForm2: return "quadratic-form2";
    case Ineq::BallQuadratic: return "ball-quadratic";
    case Ineq::ExteriorConvex: return "exterior-convex";
    case Ineq::WeightedExterior: return "weighted-exterior";
    case Ineq::TwoBoundary: return "two-boundary";
    case Ineq::AnnulusAL: return "annulus-al";
    case Ineq::TorusImproved: return "torus-improved";
    case Ineq::HyperboloidSigned: return "hyperboloid-signed";
    case Ineq::FMTComparison: return "fmt-comparison";
  }
  return "general-ridge";
}

Ineq parse_ineq(const std::string& name) {
  for (Ineq k : {Ineq::GeneralRidge, Ineq::CurvatureRidge, Ineq::ConvexImproved,
                 Ineq::BallImproved, Ineq::QuadraticForm2, Ineq::BallQuadratic,
                 Ineq::ExteriorConvex, Ineq::WeightedExterior, Ineq::TwoBoundary,
                 Ineq::AnnulusAL, Ineq::TorusImproved, Ineq::HyperboloidSigned,
                 Ineq::FMTComparison})
    if (name == ineq_name(k)) return k;
  throw Error(ErrorCode::ConfigInvalid, "unknown inequality tag: " + name);
}

bool p2_only(Ineq kind) {
  switch (kind) {
    case Ineq::QuadraticForm2:
    case Ineq::BallQuadratic:
    case Ineq::TwoBoundary:
    case Ineq::AnnulusAL:
    case Ineq::FMTComparison:
      return true;
    default:
      return false;
  }
}

bool requires_ridge_avoidance(Ineq kind) {
  switch (kind) {
    case Ineq::GeneralRidge:
    case Ineq::CurvatureRidge:
    case Ineq::QuadraticForm2:
    case Ineq::TwoBoundary:
    case Ineq::HyperboloidSigned:
      return true;
    default:
      return false;
  }
}

LhsKind lhs_kind(Ineq kind) {
  switch (kind) {
    case Ineq::GeneralRidge:
    case Ineq::CurvatureRidge:
    case Ineq::ConvexImproved:
    case Ineq::TorusImproved:
    case Ineq::HyperboloidSigned:
      return LhsKind::Directional;
    case Ineq::WeightedExterior:
      return LhsKind::WeightedDirectional;
    default:
      return LhsKind::FullGradient;
  }
}

WeightForm weight_form(Ineq kind) {
  switch (kind) {
    case Ineq::QuadraticForm2:
    case Ineq::BallQuadratic:
    case Ineq::TwoBoundary:
    case Ineq::AnnulusAL:
      return WeightForm::QuadraticForm;
    case Ineq::WeightedExterior:
      return WeightForm::PlainDensity;
    default:
      return WeightForm::Bracket;
  }
}

bool admits(Ineq kind, const geom::DomainSpec& domain) {
  using geom::Annulus;
  using geom::Cylinder;
  using geom::Disc;
  using geom::Ellipse;
  using geom::ExteriorDisc;
  using geom::Hyperboloid;
  using geom::Torus;
  switch (kind) {
    case Ineq::GeneralRidge:
    case Ineq::CurvatureRidge:
      return std::holds_alternative<Disc>(domain) ||
             std::holds_alternative<Annulus>(domain) ||
             std::holds_alternative<Ellipse>(domain) ||
             std::holds_alternative<Cylinder>(domain) ||
             std::holds_alternative<Torus>(domain) ||
             std::holds_alternative<Hyperboloid>(domain) ||
             std::holds_alternative<ExteriorDisc>(domain);
    case Ineq::ConvexImproved:
      return std::holds_alternative<Disc>(domain) ||
             std::holds_alternative<Ellipse>(domain) ||
             std::holds_alternative<Cylinder>(domain);
    case Ineq::BallImproved:
    case Ineq::BallQuadratic:
      return std::holds_alternative<Disc>(domain);
    case Ineq::QuadraticForm2:
      // Needs a sign on the distance Laplacian; the torus qualifies only in
      // the ring regime R > 2r.
      if (const auto* t = std::get_if<Torus>(&domain))
        return t->R_major > 2.0 * t->r_minor;
      return std::holds_alternative<Disc>(domain) ||
             std::holds_alternative<Ellipse>(domain);
    case Ineq::ExteriorConvex:
    case Ineq::WeightedExterior:
      return std::holds_alternative<ExteriorDisc>(domain);
    case Ineq::TwoBoundary:
    case Ineq::AnnulusAL:
      return std::holds_alternative<Annulus>(domain);
    case Ineq::TorusImproved:
      if (const auto* t = std::get_if<Torus>(&domain))
        return t->R_major > 2.0 * t->r_minor;
      return false;
    case Ineq::HyperboloidSigned:
      return std::holds_alternative<Hyperboloid>(domain);
    case Ineq::FMTComparison:
      return std::holds_alternative<Disc>(domain);
  }
  return false;
}

double rhs_constant(Ineq kind, const Exponent& p) {
  switch (weight_form(kind)) {
    case WeightForm::QuadraticForm:
      return 0.25;
    case WeightForm::PlainDensity:
      return std::pow(p.p, -p.p);
    case WeightForm::Bracket:
      return p.sharp_constant();
  }
  return p.sharp_constant();
}

double weight(const InequalitySpec& spec, const geom::DomainSpec& domain,
              const Point& x, const Exponent& p) {
  require_admissible(spec.kind, domain);
  if (p2_only(spec.kind) && std::fabs(p.p - 2.0) > 0.0)
    throw Error(ErrorCode::InadmissibleCombination,
                std::string(ineq_name(spec.kind)) + " is a p = 2 form");
  if (!geom::contains(domain, x))
    throw Error(ErrorCode::InadmissiblePoint, "weight: x outside domain");

  const double pfac = p.p / (p.p - 1.0);
  const int n = geom::dimension(domain);

  switch (spec.kind) {
    case Ineq::GeneralRidge: {
      const double delta = geom::distance(domain, x);
      const double lap = geom::laplacian_distance(domain, x);
      return 1.0 - pfac * delta * lap;
    }
    case Ineq::CurvatureRidge: {
      const double delta = geom::distance(domain, x);
      double ktilde = 0.0;
      for (double lk : geom::level_surface_curvatures(domain, x)) ktilde += lk;
      return 1.0 - pfac * delta * ktilde;
    }
    case Ineq::ConvexImproved: {
      const double delta = geom::distance(domain, x);
      const double ktilde = geom::curvature_at(domain, x).kappa_tilde;
      return 1.0 + pfac * delta * std::fabs(ktilde);
    }
    case Ineq::BallImproved: {
      const double delta = geom::distance(domain, x);
      const double r = hyp2(x[0], x[1]);
      if (r == 0.0)
        throw Error(ErrorCode::InadmissiblePoint, "weight singular at the center");
      return 1.0 + pfac * delta * (n - 1) / r;
    }
    case Ineq::QuadraticForm2: {
      const double delta = geom::distance(domain, x);
      const double lap = geom::laplacian_distance(domain, x);
      const geom::NearPointResult np = geom::near_points(domain, x);
      const Point grad = *np.grad_delta;
      const double r2 = dot(x, x);
      const double c = n - 2;
      return c * c / r2 + (1.0 + 2.0 * std::fabs(delta * lap)) / (delta * delta) +
             2.0 * c * dot(x, grad) / (r2 * delta);
    }
    case Ineq::BallQuadratic: {
      const double delta = geom::distance(domain, x);
      const double r = hyp2(x[0], x[1]);
      const double c = n - 2;
      return c * c / (r * r) + 1.0 / (delta * delta) + 2.0 / (r * delta);
    }
    case Ineq::ExteriorConvex: {
      const double delta = geom::distance(domain, x);
      const double ktilde = geom::curvature_at(domain, x).kappa_tilde;
      return 1.0 - pfac * ktilde * delta;
    }
    case Ineq::WeightedExterior: {
      const double delta = geom::distance(domain, x);
      const double ktilde = geom::curvature_at(domain, x).kappa_tilde;
      return 1.0 + p.p * ktilde * delta;
    }
    case Ineq::TwoBoundary: {
      // Component distances to the two convex boundaries and their
      // Laplacians/gradients; closed forms on the round annulus.
      const auto& an = std::get<geom::Annulus>(domain);
      const double r = hyp2(x[0], x[1]);
      const double d1 = r - an.rho;
      const double d2 = an.R - r;
      const double lap1 = (n - 1) / r;
      const double lap2 = -(n - 1) / r;
      const double grad_dot = -1.0;            // grad d1 . grad d2
      const double x_dot_g1 = r;               // x . grad d1
      const double x_dot_g2 = -r;              // x . grad d2
      return (n - 1) * (n - 3) / (r * r) + 1.0 / (d1 * d1) + 1.0 / (d2 * d2) -
             2.0 * lap1 / d1 - 2.0 * lap2 / d2 - 2.0 * grad_dot / (d1 * d2) +
             2.0 * (n - 1) * x_dot_g1 / (r * r * d1) +
             2.0 * (n - 1) * x_dot_g2 / (r * r * d2);
    }
    case Ineq::AnnulusAL: {
      const auto& an = std::get<geom::Annulus>(domain);
      const double r = hyp2(x[0], x[1]);
      const double d1 = r - an.rho;
      const double d2 = an.R - r;
      return (n - 1) * (n - 3) / (r * r) + 1.0 / (d1 * d1) + 1.0 / (d2 * d2) +
             2.0 / (d1 * d2);
    }
    case Ineq::TorusImproved: {
      const auto& t = std::get<geom::Torus>(domain);
      const double delta = geom::distance(domain, x);
      const double ring = hyp2(x[0], x[1]);
      const double extra = 1.0 / (t.r_minor - delta) - 1.0 / ring;
      return 1.0 + pfac * delta * extra;
    }
    case Ineq::HyperboloidSigned: {
      const double delta = geom::distance(domain, x);
      const double lap = geom::laplacian_distance(domain, x);
      return 1.0 - pfac * delta * lap;
    }
    case Ineq::FMTComparison:
      throw Error(ErrorCode::InadmissibleCombination,
                  "fmt-comparison has no ratio weight; use compare_fmt");
  }
  throw Error(ErrorCode::InadmissibleCombination, "unhandled inequality");
}

std::string flux_condition_note(Ineq kind, const geom::DomainSpec& domain) {
  const bool established = std::holds_alternative<geom::Disc>(domain) ||
                           std::holds_alternative<geom::Cylinder>(domain) ||
                           std::holds_alternative<geom::Torus>(domain);
  switch (kind) {
    case Ineq::ConvexImproved:
    case Ineq::BallImproved:
    case Ineq::BallQuadratic:
    case Ineq::TorusImproved:
      if (established)
        return "ridge flux condition taken as established for this domain";
      return "ridge flux condition not checked numerically; band kept below "
             "the ridge";
    default:
      return "";
  }
}

}  // namespace hardylab::hardy
