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

#include "hardylab/hardy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hardylab/core/util.hpp"
#include "hardylab/simd/kernels.hpp"

namespace hardylab::hardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTau = 2.0 * M_PI;

double powp(double v, double p) {
  if (p == 2.0) return v * v;
  return std::pow(std::fabs(v), p);
}

enum class Target {
  LhsDirectional,
  LhsFullGradient,
  LhsWeighted,
  Rhs,
  RhsPlainHardy,  // weight identically 1, density |f|^p / delta^p
};

struct DiagSink {
  double min_weight = kInf;
  std::vector<SampleDiag> rows;
  std::size_t every = 1;
  std::size_t counter = 0;

  void node(double coord, double delta, double w, double li, double ri) {
    min_weight = std::min(min_weight, w);
    if (counter++ % every == 0 && rows.size() < 16)
      rows.push_back({coord, delta, w, li, ri});
  }
};

bool is_radial_planar(const geom::DomainSpec& d) {
  return std::holds_alternative<geom::Disc>(d) ||
         std::holds_alternative<geom::Annulus>(d) ||
         std::holds_alternative<geom::ExteriorDisc>(d) ||
         std::holds_alternative<geom::Cylinder>(d);
}

simd::RadialShape radial_shape(const geom::DomainSpec& d) {
  if (const auto* disc = std::get_if<geom::Disc>(&d))
    return {simd::RadialKind::Disc, 0.0, disc->R};
  if (const auto* an = std::get_if<geom::Annulus>(&d))
    return {simd::RadialKind::Annulus, an->rho, an->R};
  if (const auto* ext = std::get_if<geom::ExteriorDisc>(&d))
    return {simd::RadialKind::ExteriorDisc, ext->rho, 0.0};
  const auto& cyl = std::get<geom::Cylinder>(d);
  return {simd::RadialKind::Cylinder, 0.0, cyl.r};
}

struct Piece {
  double lo, hi;
  BandSide delta_side;  // distance driving the profile on this piece
};

std::vector<Piece> radial_pieces(const geom::DomainSpec& d, const Band& band) {
  std::vector<Piece> out;
  if (const auto* disc = std::get_if<geom::Disc>(&d)) {
    out.push_back({disc->R - band.b, disc->R - band.a, BandSide::Auto});
  } else if (const auto* an = std::get_if<geom::Annulus>(&d)) {
    if (band.side == BandSide::Auto) {
      out.push_back({an->rho + band.a, an->rho + band.b, BandSide::Inner});
      out.push_back({an->R - band.b, an->R - band.a, BandSide::Outer});
    } else if (band.side == BandSide::Inner) {
      out.push_back({an->rho + band.a, an->rho + band.b, BandSide::Inner});
    } else {
      out.push_back({an->R - band.b, an->R - band.a, BandSide::Outer});
    }
  } else if (const auto* ext = std::get_if<geom::ExteriorDisc>(&d)) {
    out.push_back({ext->rho + band.a, ext->rho + band.b, BandSide::Auto});
  } else {
    const auto& cyl = std::get<geom::Cylinder>(d);
    out.push_back({cyl.r - band.b, cyl.r - band.a, BandSide::Auto});
  }
  return out;
}

double radial_jacobian(const geom::DomainSpec& d, double s) {
  if (const auto* cyl = std::get_if<geom::Cylinder>(&d))
    return 2.0 * kTau * cyl->half_height * s;  // per-slice measure times 2H
  return kTau * s;
}

// Weight arrays on a batch of radii; identical formulas feed the Cartesian
// and Monte Carlo paths through n = 1 calls.
void radial_weight_batch(const InequalitySpec& spec,
                         const geom::DomainSpec& domain, const Exponent& p,
                         const double* s, const double* delta, double* w,
                         std::size_t n) {
  const auto& K = simd::kernels();
  const simd::RadialShape shape = radial_shape(domain);
  const double pfac = p.p / (p.p - 1.0);
  std::vector<double> lap(n);
  switch (spec.kind) {
    case Ineq::GeneralRidge:
    case Ineq::CurvatureRidge:
    case Ineq::ExteriorConvex:
      K.radial_laplacian(shape, s, lap.data(), n);
      K.bracket_weight(delta, lap.data(), pfac, false, w, n);
      break;
    case Ineq::ConvexImproved:
    case Ineq::BallImproved:
      // On these domains |kappa_tilde| = (n-1)/s, so the absolute-value
      // bracket covers both forms.
      K.radial_laplacian(shape, s, lap.data(), n);
      K.bracket_weight(delta, lap.data(), pfac, true, w, n);
      break;
    case Ineq::AnnulusAL: {
      const auto& an = std::get<geom::Annulus>(domain);
      K.al_weight(s, an.rho, an.R, -1.0, w, n);  // (n-1)(n-3) = -1 for n = 2
      break;
    }
    case Ineq::TwoBoundary: {
      const auto& an = std::get<geom::Annulus>(domain);
      const int nd = geom::dimension(domain);
      for (std::size_t i = 0; i < n; ++i) {
        const double r = s[i];
        const double d1 = r - an.rho;
        const double d2 = an.R - r;
        const double lap1 = (nd - 1) / r;
        const double lap2 = -(nd - 1) / r;
        w[i] = (nd - 1) * (nd - 3) / (r * r) + 1.0 / (d1 * d1) +
               1.0 / (d2 * d2) - 2.0 * lap1 / d1 - 2.0 * lap2 / d2 +
               2.0 / (d1 * d2)  // -2 grad(d1).grad(d2) = +2
               + 2.0 * (nd - 1) * r / (r * r * d1) -
               2.0 * (nd - 1) * r / (r * r * d2);
      }
      break;
    }
    case Ineq::BallQuadratic:
      for (std::size_t i = 0; i < n; ++i)
        w[i] = 1.0 / (delta[i] * delta[i]) + 2.0 / (s[i] * delta[i]);
      break;
    case Ineq::QuadraticForm2:
      // Planar case: the (n-2) terms vanish and |delta*lap| = delta/s.
      for (std::size_t i = 0; i < n; ++i)
        w[i] = (1.0 + 2.0 * delta[i] / s[i]) / (delta[i] * delta[i]);
      break;
    case Ineq::WeightedExterior: {
      const auto& ext = std::get<geom::ExteriorDisc>(domain);
      for (std::size_t i = 0; i < n; ++i)
        w[i] = 1.0 + p.p * (s[i] - ext.rho) / s[i];
      break;
    }
    default:
      throw Error(ErrorCode::InadmissibleCombination,
                  "inequality not defined on a radial domain");
  }
}

double eval_radial(Target target, const InequalitySpec* spec,
                   const geom::DomainSpec& domain, const TestFunction& f,
                   const Exponent& p, int res, DiagSink* sink) {
  const auto& K = simd::kernels();
  const simd::RadialShape shape = radial_shape(domain);
  const std::vector<Piece> pieces = radial_pieces(domain, f.band());
  std::vector<double> piece_totals;

  for (const Piece& piece : pieces) {
    if (!(piece.hi > piece.lo)) continue;
    const std::size_t n = static_cast<std::size_t>(res);
    const double h = (piece.hi - piece.lo) / static_cast<double>(n);
    std::vector<double> s(n), delta(n), delta_f(n), w;
    for (std::size_t i = 0; i < n; ++i)
      s[i] = piece.lo + (static_cast<double>(i) + 0.5) * h;
    K.radial_distance(shape, s.data(), delta.data(), n);
    if (piece.delta_side != BandSide::Auto &&
        std::holds_alternative<geom::Annulus>(domain)) {
      const auto& an = std::get<geom::Annulus>(domain);
      for (std::size_t i = 0; i < n; ++i)
        delta_f[i] = piece.delta_side == BandSide::Inner ? s[i] - an.rho
                                                         : an.R - s[i];
    } else {
      delta_f = delta;
    }
    const bool need_weight = target == Target::Rhs;
    if (need_weight) {
      w.resize(n);
      radial_weight_batch(*spec, domain, p, s.data(), delta.data(), w.data(), n);
    }
    const WeightForm form =
        need_weight ? weight_form(spec->kind) : WeightForm::Bracket;

    std::vector<double> cells(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double jac = radial_jacobian(domain, s[i]);
      double v = 0.0;
      double li = 0.0, ri = 0.0;
      switch (target) {
        case Target::LhsDirectional:
        case Target::LhsFullGradient:
          v = powp(f.deriv(delta_f[i]), p.p);
          break;
        case Target::LhsWeighted:
          v = powp(delta[i], p.p) * powp(f.deriv(delta_f[i]), p.p);
          break;
        case Target::RhsPlainHardy:
          v = powp(f.value(delta_f[i]), p.p) / powp(delta[i], p.p);
          break;
        case Target::Rhs: {
          const double fv = f.value(delta_f[i]);
          switch (form) {
            case WeightForm::Bracket:
              v = w[i] * powp(fv, p.p) / powp(delta[i], p.p);
              break;
            case WeightForm::QuadraticForm:
              v = w[i] * fv * fv;
              break;
            case WeightForm::PlainDensity:
              v = w[i] * powp(fv, p.p);
              break;
          }
          if (sink != nullptr && fv > 0.0) {
            li = powp(f.deriv(delta_f[i]), p.p) * jac;
            ri = v * jac;
            sink->node(s[i], delta[i], w[i], li, ri);
          }
          break;
        }
      }
      cells[i] = v * jac * h;
    }
    piece_totals.push_back(util::pairwise_sum(cells));
  }
  return util::pairwise_sum(piece_totals);
}

// Torus integrals in tube coordinates (rho_t, psi); the toroidal angle
// integrates to 2*pi.
double eval_torus(Target target, const InequalitySpec* spec,
                  const geom::Torus& t, const TestFunction& f,
                  const Exponent& p, int res, DiagSink* sink) {
  const Band& band = f.band();
  const double lo = t.r_minor - band.b;
  const double hi = t.r_minor - band.a;
  const double pfac = p.p / (p.p - 1.0);
  return integrate_rect(lo, hi, -M_PI, M_PI, res, res, [&](double rt,
                                                           double psi) {
    const double delta = t.r_minor - rt;
    const double ring = t.R_major + rt * std::cos(psi);
    const double jac = rt * ring * kTau;
    switch (target) {
      case Target::LhsDirectional:
      case Target::LhsFullGradient:
        return powp(f.deriv(delta), p.p) * jac;
      case Target::LhsWeighted:
        return powp(delta, p.p) * powp(f.deriv(delta), p.p) * jac;
      case Target::RhsPlainHardy:
        return powp(f.value(delta), p.p) / powp(delta, p.p) * jac;
      case Target::Rhs:
        break;
    }
    const double lap = -(ring + rt * std::cos(psi)) / (rt * ring);
    double w = 0.0;
    double v = 0.0;
    const double fv = f.value(delta);
    switch (spec->kind) {
      case Ineq::GeneralRidge:
      case Ineq::CurvatureRidge:
        w = 1.0 - pfac * delta * lap;
        v = w * powp(fv, p.p) / powp(delta, p.p);
        break;
      case Ineq::TorusImproved:
        w = 1.0 + pfac * delta * (1.0 / rt - 1.0 / ring);
        v = w * powp(fv, p.p) / powp(delta, p.p);
        break;
      case Ineq::QuadraticForm2: {
        const double x2 = ring * ring + rt * rt * std::sin(psi) * std::sin(psi);
        const double x_dot_grad = -(t.R_major * std::cos(psi) + rt);
        w = 1.0 / x2 + (1.0 + 2.0 * std::fabs(delta * lap)) / (delta * delta) +
            2.0 * x_dot_grad / (x2 * delta);
        v = w * fv * fv;
        break;
      }
      default:
        throw Error(ErrorCode::InadmissibleCombination,
                    "inequality not defined on the torus");
    }
    if (sink != nullptr && fv > 0.0)
      sink->node(rt, delta, w, powp(f.deriv(delta), p.p) * jac, v * jac);
    return v * jac;
  });
}

// Hyperboloid integrals in boundary-normal coordinates (s, delta); valid off
// the axis because delta stays below the reach w(s) >= 1.
double eval_hyperboloid(Target target, const InequalitySpec* spec,
                        const geom::Hyperboloid& hb, const TestFunction& f,
                        const Exponent& p, int res, DiagSink* sink) {
  const Band& band = f.band();
  const double pfac = p.p / (p.p - 1.0);
  return integrate_rect(
      -hb.s_max, hb.s_max, band.a, band.b, res, res, [&](double s,
                                                         double delta) {
        const double w2 = 2.0 * s * s + 1.0;
        const double wv = std::sqrt(w2);
        const double k1 = -1.0 / (w2 * wv);
        const double k2 = 1.0 / wv;
        const double jac = (1.0 + delta * k1) * (1.0 + delta * k2) * wv * kTau;
        switch (target) {
          case Target::LhsDirectional:
          case Target::LhsFullGradient:
            return powp(f.deriv(delta), p.p) * jac;
          case Target::LhsWeighted:
            return powp(delta, p.p) * powp(f.deriv(delta), p.p) * jac;
          case Target::RhsPlainHardy:
            return powp(f.value(delta), p.p) / powp(delta, p.p) * jac;
          case Target::Rhs:
            break;
        }
        const double lap = -1.0 / (w2 * wv - delta) + 1.0 / (wv + delta);
        if (spec->kind != Ineq::GeneralRidge &&
            spec->kind != Ineq::CurvatureRidge &&
            spec->kind != Ineq::HyperboloidSigned)
          throw Error(ErrorCode::InadmissibleCombination,
                      "inequality not defined on the hyperboloid");
        const double w = 1.0 - pfac * delta * lap;
        const double fv = f.value(delta);
        const double v = w * powp(fv, p.p) / powp(delta, p.p);
        if (sink != nullptr && fv > 0.0)
          sink->node(s, delta, w, powp(f.deriv(delta), p.p) * jac, v * jac);
        return v * jac;
      });
}

// Ellipse integrals in boundary-normal coordinates (t, delta); bands end
// below the reach floor so the chart is injective on the support.
double eval_ellipse(Target target, const InequalitySpec* spec,
                    const geom::Ellipse& el, const TestFunction& f,
                    const Exponent& p, int res, DiagSink* sink) {
  const Band& band = f.band();
  const double pfac = p.p / (p.p - 1.0);
  return integrate_rect(
      -M_PI, M_PI, band.a, band.b, res, res, [&](double t, double delta) {
        const double st = std::sin(t), ct = std::cos(t);
        const double m = el.a * el.a * st * st + el.b * el.b * ct * ct;
        const double speed = std::sqrt(m);
        const double kappa = -el.a * el.b / (m * speed);
        const double jac = (1.0 + delta * kappa) * speed;
        switch (target) {
          case Target::LhsDirectional:
          case Target::LhsFullGradient:
            return powp(f.deriv(delta), p.p) * jac;
          case Target::LhsWeighted:
            return powp(delta, p.p) * powp(f.deriv(delta), p.p) * jac;
          case Target::RhsPlainHardy:
            return powp(f.value(delta), p.p) / powp(delta, p.p) * jac;
          case Target::Rhs:
            break;
        }
        const double lap = kappa / (1.0 + delta * kappa);
        double w = 0.0;
        double v = 0.0;
        const double fv = f.value(delta);
        switch (spec->kind) {
          case Ineq::GeneralRidge:
          case Ineq::CurvatureRidge:
            w = 1.0 - pfac * delta * lap;
            v = w * powp(fv, p.p) / powp(delta, p.p);
            break;
          case Ineq::ConvexImproved:
            w = 1.0 + pfac * delta * std::fabs(lap);
            v = w * powp(fv, p.p) / powp(delta, p.p);
            break;
          case Ineq::QuadraticForm2:
            w = (1.0 + 2.0 * std::fabs(delta * lap)) / (delta * delta);
            v = w * fv * fv;
            break;
          default:
            throw Error(ErrorCode::InadmissibleCombination,
                        "inequality not defined on the ellipse");
        }
        if (sink != nullptr && fv > 0.0)
          sink->node(t, delta, w, powp(f.deriv(delta), p.p) * jac, v * jac);
        return v * jac;
      });
}

// Cartesian midpoint cross-check for the planar radial domains; reuses the
// batch weight formulas through length-1 calls.
double eval_cartesian(Target target, const InequalitySpec* spec,
                      const geom::DomainSpec& domain, const TestFunction& f,
                      const Exponent& p, int res, DiagSink* sink) {
  if (!is_radial_planar(domain))
    throw Error(ErrorCode::ConfigInvalid,
                "tensor-grid cross-check supports planar radial domains");
  const std::vector<Piece> pieces = radial_pieces(domain, f.band());
  double smax = 0.0;
  for (const Piece& piece : pieces) smax = std::max(smax, piece.hi);
  const auto& K = simd::kernels();
  const simd::RadialShape shape = radial_shape(domain);
  const double per_slice =
      std::holds_alternative<geom::Cylinder>(domain)
          ? 2.0 * std::get<geom::Cylinder>(domain).half_height
          : 1.0;

  return integrate_rect(
      -smax, smax, -smax, smax, res, res, [&](double x, double y) {
        const double s = std::sqrt(x * x + y * y);
        const Piece* inside = nullptr;
        BandSide side = BandSide::Auto;
        for (const Piece& piece : pieces)
          if (s > piece.lo && s < piece.hi) {
            inside = &piece;
            side = piece.delta_side;
          }
        if (inside == nullptr) return 0.0;
        double delta = 0.0;
        K.radial_distance(shape, &s, &delta, 1);
        double delta_f = delta;
        if (const auto* an = std::get_if<geom::Annulus>(&domain);
            an != nullptr && f.band().side != BandSide::Auto)
          delta_f = side == BandSide::Inner ? s - an->rho : an->R - s;
        switch (target) {
          case Target::LhsDirectional:
          case Target::LhsFullGradient:
            return powp(f.deriv(delta_f), p.p) * per_slice;
          case Target::LhsWeighted:
            return powp(delta, p.p) * powp(f.deriv(delta_f), p.p) * per_slice;
          case Target::RhsPlainHardy:
            return powp(f.value(delta_f), p.p) / powp(delta, p.p) * per_slice;
          case Target::Rhs:
            break;
        }
        double w = 0.0;
        radial_weight_batch(*spec, domain, p, &s, &delta, &w, 1);
        const double fv = f.value(delta_f);
        double v = 0.0;
        switch (weight_form(spec->kind)) {
          case WeightForm::Bracket:
            v = w * powp(fv, p.p) / powp(delta, p.p);
            break;
          case WeightForm::QuadraticForm:
            v = w * fv * fv;
            break;
          case WeightForm::PlainDensity:
            v = w * powp(fv, p.p);
            break;
        }
        if (sink != nullptr && fv > 0.0)
          sink->node(s, delta, w, powp(f.deriv(delta_f), p.p), v);
        return v * per_slice;
      });
}

double eval_mc(Target target, const InequalitySpec* spec,
               const geom::DomainSpec& domain, const TestFunction& f,
               const Exponent& p, int res, std::uint64_t seed) {
  if (!is_radial_planar(domain))
    throw Error(ErrorCode::ConfigInvalid,
                "monte-carlo cross-check supports planar radial domains");
  const std::vector<Piece> pieces = radial_pieces(domain, f.band());
  double smax = 0.0;
  for (const Piece& piece : pieces) smax = std::max(smax, piece.hi);
  const double lo[3] = {-smax, -smax, 0.0};
  const double hi[3] = {smax, smax, 0.0};
  const std::size_t samples =
      static_cast<std::size_t>(res) * static_cast<std::size_t>(res);
  const auto& K = simd::kernels();
  const simd::RadialShape shape = radial_shape(domain);
  const double per_slice =
      std::holds_alternative<geom::Cylinder>(domain)
          ? 2.0 * std::get<geom::Cylinder>(domain).half_height
          : 1.0;
  return integrate_mc_box(lo, hi, 2, samples, seed, [&](const Point& pt) {
    const double s = std::sqrt(pt[0] * pt[0] + pt[1] * pt[1]);
    const Piece* inside = nullptr;
    for (const Piece& piece : pieces)
      if (s > piece.lo && s < piece.hi) inside = &piece;
    if (inside == nullptr) return 0.0;
    double delta = 0.0;
    K.radial_distance(shape, &s, &delta, 1);
    double delta_f = delta;
    if (const auto* an = std::get_if<geom::Annulus>(&domain);
        an != nullptr && f.band().side != BandSide::Auto)
      delta_f = inside->delta_side == BandSide::Inner ? s - an->rho : an->R - s;
    switch (target) {
      case Target::LhsDirectional:
      case Target::LhsFullGradient:
        return powp(f.deriv(delta_f), p.p) * per_slice;
      case Target::LhsWeighted:
        return powp(delta, p.p) * powp(f.deriv(delta_f), p.p) * per_slice;
      case Target::RhsPlainHardy:
        return powp(f.value(delta_f), p.p) / powp(delta, p.p) * per_slice;
      case Target::Rhs:
        break;
    }
    double w = 0.0;
    radial_weight_batch(*spec, domain, p, &s, &delta, &w, 1);
    const double fv = f.value(delta_f);
    switch (weight_form(spec->kind)) {
      case WeightForm::Bracket:
        return w * powp(fv, p.p) / powp(delta, p.p) * per_slice;
      case WeightForm::QuadraticForm:
        return w * fv * fv * per_slice;
      case WeightForm::PlainDensity:
        return w * powp(fv, p.p) * per_slice;
    }
    return 0.0;
  });
}

struct ResolvedScheme {
  Scheme scheme;
  int res;
  std::string label;
};

ResolvedScheme resolve_scheme(const geom::DomainSpec& domain,
                              const QuadratureSpec& quad) {
  Scheme scheme = quad.scheme;
  const bool reduced_2d = std::holds_alternative<geom::Torus>(domain) ||
                          std::holds_alternative<geom::Hyperboloid>(domain) ||
                          std::holds_alternative<geom::Ellipse>(domain);
  if (scheme == Scheme::Auto)
    scheme = reduced_2d && !std::holds_alternative<geom::Torus>(domain)
                 ? Scheme::TensorGrid
                 : Scheme::Radial1D;
  ResolvedScheme out{scheme, quad.resolution, scheme_name(scheme)};
  if (scheme == Scheme::Radial1D || scheme == Scheme::TensorGrid) {
    // Reduced boundary-coordinate grids serve both requests on the 2-d
    // reduction domains; the Cartesian grid is the planar cross-check.
    if (reduced_2d || std::holds_alternative<geom::Torus>(domain)) {
      out.label = std::holds_alternative<geom::Torus>(domain)
                      ? "radial-1d"
                      : "tensor-grid-midpoint";
      if (out.res == 0) out.res = 256;
    } else if (scheme == Scheme::TensorGrid) {
      if (out.res == 0) out.res = 512;
    } else {
      if (out.res == 0) out.res = 4096;
    }
  } else if (scheme == Scheme::MonteCarlo) {
    if (out.res == 0) out.res = 512;
  }
  return out;
}

double eval_integral(Target target, const InequalitySpec* spec,
                     const geom::DomainSpec& domain, const TestFunction& f,
                     const Exponent& p, const ResolvedScheme& rs, int res,
                     std::uint64_t seed, DiagSink* sink) {
  if (rs.scheme == Scheme::MonteCarlo)
    return eval_mc(target, spec, domain, f, p, res, seed);
  if (const auto* t = std::get_if<geom::Torus>(&domain))
    return eval_torus(target, spec, *t, f, p, res, sink);
  if (const auto* hb = std::get_if<geom::Hyperboloid>(&domain))
    return eval_hyperboloid(target, spec, *hb, f, p, res, sink);
  if (const auto* el = std::get_if<geom::Ellipse>(&domain))
    return eval_ellipse(target, spec, *el, f, p, res, sink);
  if (rs.scheme == Scheme::TensorGrid)
    return eval_cartesian(target, spec, domain, f, p, res, sink);
  return eval_radial(target, spec, domain, f, p, res, sink);
}

Integral integral_for(Target target, const InequalitySpec* spec,
                      const geom::DomainSpec& domain, const TestFunction& f,
                      const Exponent& p, const QuadratureSpec& quad,
                      DiagSink* sink) {
  validate(quad);
  geom::validate(domain);
  const ResolvedScheme rs = resolve_scheme(domain, quad);
  if (rs.scheme == Scheme::MonteCarlo) {
    // Monte Carlo refinement doubles the sample budget instead of the
    // per-axis resolution; convergence flagging stays the same.
    Integral out;
    out.coarse = eval_integral(target, spec, domain, f, p, rs, rs.res, quad.seed,
                               nullptr);
    out.value = eval_integral(target, spec, domain, f, p, rs,
                              static_cast<int>(rs.res * 1.4142135623730951),
                              quad.seed + 1, sink);
    out.converged = out.rel_change() < 10.0 * tol::quad_rel;
    return out;
  }
  return with_refinement(rs.res, [&](int res) {
    const bool fine = res != rs.res;
    return eval_integral(target, spec, domain, f, p, rs, res, quad.seed,
                         fine ? sink : nullptr);
  });
}

}  // namespace

Integral lhs_directional(const geom::DomainSpec& domain, const TestFunction& f,
                         const Exponent& p, const QuadratureSpec& quad) {
  return integral_for(Target::LhsDirectional, nullptr, domain, f, p, quad,
                      nullptr);
}

Integral lhs_full_gradient(const geom::DomainSpec& domain,
                           const TestFunction& f, const Exponent& p,
                           const QuadratureSpec& quad) {
  return integral_for(Target::LhsFullGradient, nullptr, domain, f, p, quad,
                      nullptr);
}

Integral rhs(const InequalitySpec& spec, const geom::DomainSpec& domain,
             const TestFunction& f, const Exponent& p,
             const QuadratureSpec& quad) {
  if (spec.kind == Ineq::FMTComparison)
    throw Error(ErrorCode::InadmissibleCombination,
                "fmt-comparison has no ratio form; use compare_fmt");
  if (!admits(spec.kind, domain))
    throw Error(ErrorCode::InadmissibleCombination,
                std::string(ineq_name(spec.kind)) + " does not admit " +
                    geom::domain_name(domain));
  Integral out = integral_for(Target::Rhs, &spec, domain, f, p, quad, nullptr);
  const double c = rhs_constant(spec.kind, p);
  out.value *= c;
  out.coarse *= c;
  return out;
}

HardyReport verify(const InequalitySpec& spec, const geom::DomainSpec& domain,
                   const Exponent& p, const TestProfile& profile,
                   const Band& band, const QuadratureSpec& quad) {
  validate(quad);
  geom::validate(domain);
  if (spec.kind == Ineq::FMTComparison)
    throw Error(ErrorCode::InadmissibleCombination,
                "fmt-comparison is verified pointwise; use compare_fmt");
  if (!admits(spec.kind, domain))
    throw Error(ErrorCode::InadmissibleCombination,
                std::string(ineq_name(spec.kind)) + " does not admit " +
                    geom::domain_name(domain));
  if (p2_only(spec.kind) && p.p != 2.0)
    throw Error(ErrorCode::InadmissibleCombination,
                std::string(ineq_name(spec.kind)) + " is a p = 2 form");
  if (requires_ridge_avoidance(spec.kind) && band.side != BandSide::Auto &&
      band.b >= geom::ridge_floor(domain))
    throw Error(ErrorCode::BandTouchesRidge,
                "one-sided band crosses the ridge of a ridge-avoiding form");

  const TestFunction f = make_test_function(profile, domain, band);
  const ResolvedScheme rs = resolve_scheme(domain, quad);

  Target lhs_target = Target::LhsDirectional;
  switch (lhs_kind(spec.kind)) {
    case LhsKind::Directional: lhs_target = Target::LhsDirectional; break;
    case LhsKind::FullGradient: lhs_target = Target::LhsFullGradient; break;
    case LhsKind::WeightedDirectional: lhs_target = Target::LhsWeighted; break;
  }

  const Integral lhs_int =
      integral_for(lhs_target, &spec, domain, f, p, quad, nullptr);
  DiagSink sink;
  sink.every = std::max<std::size_t>(1, static_cast<std::size_t>(rs.res) / 8);
  Integral rhs_int = integral_for(Target::Rhs, &spec, domain, f, p, quad, &sink);
  const double c = rhs_constant(spec.kind, p);
  rhs_int.value *= c;
  rhs_int.coarse *= c;
  if (!std::isfinite(sink.min_weight) && is_radial_planar(domain)) {
    // Monte Carlo runs skip node diagnostics; take them from a radial pass.
    DiagSink fallback;
    fallback.every = 128;
    eval_radial(Target::Rhs, &spec, domain, f, p, 1024, &fallback);
    sink = std::move(fallback);
  }

  HardyReport report;
  report.inequality = ineq_name(spec.kind);
  report.domain = geom::domain_name(domain);
  report.profile = profile_name(profile);
  report.p = p.p;
  report.band = band;
  report.scheme = rs.label;
  report.resolution = rs.res;
  report.seed = quad.seed;
  report.lhs = lhs_int.value;
  report.rhs = rhs_int.value;
  report.ratio = rhs_int.value != 0.0 ? lhs_int.value / rhs_int.value : kInf;
  report.min_pointwise_weight = sink.min_weight;
  report.constant_used = c;
  report.lhs_converged = lhs_int.converged;
  report.rhs_converged = rhs_int.converged;
  report.samples = std::move(sink.rows);
  report.truncation = geom::truncation_echo(domain);
  report.note = flux_condition_note(spec.kind, domain);
  const bool holds = rhs_int.value > 0.0
                         ? report.ratio >= 1.0 - tol::ratio_slack
                         : lhs_int.value >= rhs_int.value;
  report.passed = report.converged() && holds;
  return report;
}

ConstantEstimate estimate_constant(const geom::DomainSpec& domain,
                                   const Exponent& p,
                                   const ConstantFamily& family,
                                   const QuadratureSpec& quad) {
  validate(quad);
  geom::validate(domain);
  double sup = geom::delta_sup(domain);
  if (!std::isfinite(sup)) sup = geom::ridge_floor(domain);
  if (!std::isfinite(sup)) sup = geom::domain_scale(domain);
  if (!(family.a_lo > 0.0 && family.a_lo < family.a_hi &&
        family.b_lo < family.b_hi && family.a_hi < family.b_lo &&
        family.q_lo < family.q_hi))
    throw Error(ErrorCode::ConfigInvalid, "constant family ranges are empty");

  ConstantEstimate best;
  best.value = kInf;
  int evals = 0;
  bool exhausted = false;

  const auto quotient = [&](const TestProfile& prof, double a_frac,
                            double b_frac) -> double {
    if (evals >= family.budget) {
      exhausted = true;
      return kInf;
    }
    ++evals;
    const Band b{a_frac * sup, b_frac * sup, BandSide::Auto};
    const TestFunction f = make_test_function(prof, domain, b);
    const ResolvedScheme rs = resolve_scheme(domain, quad);
    const double num = eval_integral(Target::LhsDirectional, nullptr, domain, f,
                                     p, rs, rs.res, quad.seed, nullptr);
    const double den = eval_integral(Target::RhsPlainHardy, nullptr, domain, f,
                                     p, rs, rs.res, quad.seed, nullptr);
    return den > 0.0 ? num / den : kInf;
  };

  const auto remember = [&](double value, const TestProfile& prof,
                            double a_frac, double b_frac, double q) {
    if (value < best.value) {
      best.value = value;
      best.band = {a_frac * sup, b_frac * sup, BandSide::Auto};
      best.profile = profile_name(prof);
      best.q = q;
    }
  };

  // Coordinate golden-section descent over (q, a, b) with the power profile.
  constexpr double kInvPhi = 0.6180339887498949;
  const auto golden = [&](double lo, double hi,
                          const std::function<double(double)>& g) {
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
    double fc = g(c), fd = g(d);
    for (int i = 0; i < 10 && !exhausted; ++i) {
      if (fc < fd) {
        b = d; d = c; fd = fc;
        c = b - kInvPhi * (b - a);
        fc = g(c);
      } else {
        a = c; c = d; fc = fd;
        d = a + kInvPhi * (b - a);
        fd = g(d);
      }
    }
    return 0.5 * (a + b);
  };

  double q = 1.0 - 1.0 / p.p;  // start at the sharp-profile exponent
  double a_frac = family.a_lo;
  double b_frac = family.b_hi;
  for (int round = 0; round < 2 && !exhausted; ++round) {
    q = golden(family.q_lo, family.q_hi, [&](double qq) {
      const double v = quotient(PowerBump{qq}, a_frac, b_frac);
      remember(v, PowerBump{qq}, a_frac, b_frac, qq);
      return v;
    });
    a_frac = std::exp(golden(std::log(family.a_lo), std::log(family.a_hi),
                             [&](double la) {
                               const double af = std::exp(la);
                               const double v = quotient(PowerBump{q}, af, b_frac);
                               remember(v, PowerBump{q}, af, b_frac, q);
                               return v;
                             }));
    b_frac = golden(family.b_lo, family.b_hi, [&](double bf) {
      const double v = quotient(PowerBump{q}, a_frac, bf);
      remember(v, PowerBump{q}, a_frac, bf, q);
      return v;
    });
  }
  if (!exhausted) {
    const double v = quotient(SmoothBump{}, a_frac, b_frac);
    remember(v, SmoothBump{}, a_frac, b_frac, 0.0);
  }

  best.evals = evals;
  best.budget_exhausted = exhausted;
  if (!std::isfinite(best.value))
    throw Error(ErrorCode::SearchBudgetExhausted,
                "no finite quotient evaluated within the budget");
  return best;
}

FmtTable compare_fmt(double alpha, double R, std::size_t samples) {
  if (!(alpha > -2.0))
    throw Error(ErrorCode::AlphaOutOfRange, "comparison requires alpha > -2");
  if (!(R > 0.0)) throw Error(ErrorCode::ConfigInvalid, "R must be positive");
  FmtTable table;
  table.alpha = alpha;
  table.epsilon = alpha + 2.0;
  table.c_alpha = alpha >= -1.0
                      ? std::pow(2.0, alpha) * (2.0 * alpha + 3.0)
                      : std::pow(2.0, alpha) * (alpha + 2.0) * (alpha + 2.0);
  table.d_int = 2.0 * R;
  table.R = R;
  table.n = 2;
  const int n = table.n;
  table.positive_radius =
      table.epsilon < 1.0 ? (2.0 * n - 2.0) * R / (2.0 * n - 1.0) : R;

  const double margin = 1e-4 * R;
  table.rows.reserve(samples);
  double min_margin = kInf;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x =
        margin + (R - 2.0 * margin) * (static_cast<double>(i) + 0.5) /
                     static_cast<double>(samples);
    const double delta = R - x;
    FmtRow row;
    row.x_abs = x;
    row.delta = delta;
    row.i1 = (n - 1) / (2.0 * delta * x);
    row.i2 = table.c_alpha * std::pow(table.d_int, -(alpha + 2.0)) *
             std::pow(delta, alpha);
    row.bound = table.epsilon >= 1.0
                    ? (2.0 * n - 1.0 - 2.0 * table.epsilon) / (4.0 * delta * x)
                    : ((2.0 * n - 2.0) * R - (2.0 * n - 1.0) * x) /
                          (4.0 * delta * delta * x);
    row.margin = row.i1 - row.i2 - row.bound;
    min_margin = std::min(min_margin, row.margin);
    table.rows.push_back(row);
  }
  table.min_margin = min_margin;
  table.passed = min_margin >= -tol::algebra;
  return table;
}

}  // namespace hardylab::hardy
