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

#ifndef HARDYLAB_HARDY_VERIFY_HPP
#define HARDYLAB_HARDY_VERIFY_HPP

#include "hardylab/hardy/inequality.hpp"
#include "hardylab/hardy/profile.hpp"
#include "hardylab/hardy/quadrature.hpp"
#include "hardylab/hardy/report.hpp"

namespace hardylab::hardy {

/// Integral of |grad(d) . grad(f)|^p = |eta'(d)|^p over the band support.
Integral lhs_directional(const geom::DomainSpec& domain, const TestFunction& f,
                         const Exponent& p, const QuadratureSpec& quad);

/// Integral of |grad f|^p. For f = eta(d) this coincides with the
/// directional integral off the ridge since |grad d| = 1; the coincidence is
/// asserted as a property test, not assumed silently elsewhere.
Integral lhs_full_gradient(const geom::DomainSpec& domain,
                           const TestFunction& f, const Exponent& p,
                           const QuadratureSpec& quad);

/// Right-hand side including its constant: constant * integral of the
/// weighted density for the given inequality.
Integral rhs(const InequalitySpec& spec, const geom::DomainSpec& domain,
             const TestFunction& f, const Exponent& p,
             const QuadratureSpec& quad);

/// Full verification run; fills diagnostics and the pass verdict
/// (ratio >= 1 - 3*quad_rel on converged quadratures).
HardyReport verify(const InequalitySpec& spec, const geom::DomainSpec& domain,
                   const Exponent& p, const TestProfile& profile,
                   const Band& band, const QuadratureSpec& quad);

/// Search family for the plain Hardy quotient (weight identically 1). Band
/// endpoints are fractions of sup delta.
struct ConstantFamily {
  double a_lo = 1e-3;
  double a_hi = 0.05;
  double b_lo = 0.30;
  double b_hi = 0.95;
  double q_lo = 0.35;
  double q_hi = 0.80;
  int budget = 160;  // quotient evaluations
};

struct ConstantEstimate {
  double value = 0.0;
  Band band;
  std::string profile;
  double q = 0.0;
  int evals = 0;
  bool budget_exhausted = false;
};

/// Infimum of the plain Hardy quotient over the family; an empirical upper
/// bound for the best constant, never a sharpness claim.
ConstantEstimate estimate_constant(const geom::DomainSpec& domain,
                                   const Exponent& p,
                                   const ConstantFamily& family,
                                   const QuadratureSpec& quad);

struct FmtRow {
  double x_abs;
  double delta;
  double i1;     // (n-1)/(2*delta*|x|)
  double i2;     // c_alpha * D_int^{-(alpha+2)} * delta^alpha
  double bound;  // displayed lower bound for i1 - i2
  double margin; // i1 - i2 - bound
};

struct FmtTable {
  double alpha = 0.0;
  double epsilon = 0.0;  // alpha + 2
  double c_alpha = 0.0;
  double d_int = 0.0;
  double R = 0.0;
  int n = 2;
  double min_margin = 0.0;
  double positive_radius = 0.0;  // bound positive iff |x| below this (eps<1)
  bool passed = false;
  std::vector<FmtRow> rows;
};

/// Pointwise comparison of the curvature term against the remainder-term
/// density on the disc, p = 2 only. Requires alpha > -2.
FmtTable compare_fmt(double alpha, double R, std::size_t samples);

}  // namespace hardylab::hardy

#endif  // HARDYLAB_HARDY_VERIFY_HPP
