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

#ifndef HARDYLAB_HARDY_INEQUALITY_HPP
#define HARDYLAB_HARDY_INEQUALITY_HPP

#include <string>

#include "hardylab/geometry/ops.hpp"

namespace hardylab::hardy {

/// Exponent of the Hardy quotient; admissible range is 1 < p < infinity.
struct Exponent {
  double p;

  explicit Exponent(double value) : p(value) {
    if (!(p > 1.0) || !std::isfinite(p))
      throw Error(ErrorCode::ConfigInvalid, "exponent requires 1 < p < inf");
  }

  /// ((p-1)/p)^p, the sharp convex-domain constant.
  double sharp_constant() const { return std::pow((p - 1.0) / p, p); }
};

// One verified inequality family. Weights multiply |f|^p/delta^p except for
// the p = 2 quadratic forms (weight times |f|^2) and the weighted exterior
// form (weight times |f|^p).
enum class Ineq {
  GeneralRidge,       // directional LHS, weight 1 - p*delta*lap/(p-1)
  CurvatureRidge,     // same weight assembled from level-surface curvatures
  ConvexImproved,     // convex domains, weight 1 + p*delta*|ktilde|/(p-1)
  BallImproved,       // ball, extra (n-1)/(|x| delta^{p-1}) term
  QuadraticForm2,     // p=2 vector-field form, full quadratic weight
  BallQuadratic,      // its ball specialization
  ExteriorConvex,     // complement of a convex body
  WeightedExterior,   // delta^p-weighted LHS, constant 1/p^p
  TwoBoundary,        // p=2, two convex boundaries, component distances
  AnnulusAL,          // its round-annulus specialization
  TorusImproved,      // ring torus, R > 2r
  HyperboloidSigned,  // one-sheeted hyperboloid, signed weight
  FMTComparison,      // pointwise comparison table, see compare_fmt
};

struct InequalitySpec {
  Ineq kind;
  double alpha = 0.0;  // FMTComparison only
};

const char* ineq_name(Ineq kind);
Ineq parse_ineq(const std::string& name);

bool p2_only(Ineq kind);
bool requires_ridge_avoidance(Ineq kind);

enum class LhsKind { Directional, FullGradient, WeightedDirectional };
LhsKind lhs_kind(Ineq kind);

/// Weight dimension class, for report annotations.
enum class WeightForm { Bracket, QuadraticForm, PlainDensity };
WeightForm weight_form(Ineq kind);

bool admits(Ineq kind, const geom::DomainSpec& domain);

/// Multiplier in front of the right-hand integral.
double rhs_constant(Ineq kind, const Exponent& p);

/// Pointwise weight through the geometry operations (near point,
/// curvatures). Quadrature uses reduced closed forms; the two routes are
/// consistency-tested against each other.
double weight(const InequalitySpec& spec, const geom::DomainSpec& domain,
              const Point& x, const Exponent& p);

/// Note recorded in reports for inequalities whose ridge flux condition the
/// source establishes rather than the lab checking it numerically. Empty
/// when not applicable.
std::string flux_condition_note(Ineq kind, const geom::DomainSpec& domain);

}  // namespace hardylab::hardy

#endif  // HARDYLAB_HARDY_INEQUALITY_HPP
