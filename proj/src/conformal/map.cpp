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

#include "hardylab/conformal/map.hpp"

#include <cmath>
#include <vector>

namespace hardylab::conformal {

namespace {

constexpr double kBoundarySnap = 1e-12;

const IdentityAnnulus* as_identity(const MapSpec& m) {
  return std::get_if<IdentityAnnulus>(&m);
}
const SqrtQuadratic* as_sqrtq(const MapSpec& m) {
  return std::get_if<SqrtQuadratic>(&m);
}
const Composed* as_composed(const MapSpec& m) {
  return std::get_if<Composed>(&m);
}

const MapSpec& root_map(const MapSpec& m) {
  const MapSpec* cur = &m;
  while (const Composed* c = as_composed(*cur)) cur = c->base.get();
  return *cur;
}

Complex sqrtq_eval(Complex z) {
  if (z == Complex(0.0, 0.0)) return Complex(0.0, 1.0);
  // Odd branch, positive for real z > 1, cut on the real segment between the
  // branch points.
  return z * std::sqrt(1.0 - 1.0 / (z * z));
}

}  // namespace

MapSpec compose(MapSpec base, Transform transform) {
  Composed c{std::make_shared<const MapSpec>(std::move(base)), transform};
  return MapSpec{std::move(c)};
}

void validate(const MapSpec& map) {
  if (const IdentityAnnulus* id = as_identity(map)) {
    if (!(id->rho > 0.0 && id->rho < id->R))
      throw Error(ErrorCode::ConfigInvalid, "identity annulus needs 0 < rho < R");
    return;
  }
  if (const SqrtQuadratic* sq = as_sqrtq(map)) {
    if (!(sq->rho > 0.0 && sq->rho < sq->R))
      throw Error(ErrorCode::ConfigInvalid, "sqrt-quadratic needs 0 < rho < R");
    if (!(sq->R > 1.0))
      throw Error(ErrorCode::ConfigInvalid,
                  "sqrt-quadratic needs R > 1 for a connected domain");
    if (sq->rho == 1.0)
      throw Error(ErrorCode::ConfigInvalid,
                  "sqrt-quadratic inner boundary degenerates at rho = 1");
    return;
  }
  const Composed& c = std::get<Composed>(map);
  if (c.transform.kind == TransformKind::Scale && !(c.transform.parameter > 0.0))
    throw Error(ErrorCode::ConfigInvalid, "scale factor must be positive");
  validate(*c.base);
}

std::string map_name(const MapSpec& map) {
  if (as_identity(map)) return "identity-annulus";
  if (as_sqrtq(map)) return "sqrt-quadratic";
  const Composed& c = std::get<Composed>(map);
  return map_name(*c.base) + "+" + transform_name(c.transform.kind);
}

const char* transform_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::Scale: return "scale";
    case TransformKind::Rotation: return "rotation";
    case TransformKind::Inversion: return "inversion";
  }
  return "scale";
}

std::pair<double, double> annulus_radii(const MapSpec& map) {
  if (const IdentityAnnulus* id = as_identity(map)) return {id->rho, id->R};
  if (const SqrtQuadratic* sq = as_sqrtq(map)) return {sq->rho, sq->R};
  const Composed& c = std::get<Composed>(map);
  auto [rho, R] = annulus_radii(*c.base);
  switch (c.transform.kind) {
    case TransformKind::Scale:
      return {rho * c.transform.parameter, R * c.transform.parameter};
    case TransformKind::Rotation:
      return {rho, R};
    case TransformKind::Inversion:
      return {1.0 / R, 1.0 / rho};
  }
  return {rho, R};
}

bool in_domain(const MapSpec& map, Complex z) {
  const MapSpec& root = root_map(map);
  if (const IdentityAnnulus* id = as_identity(root)) {
    const double r = std::abs(z);
    return r > id->rho && r < id->R;
  }
  const SqrtQuadratic& sq = std::get<SqrtQuadratic>(root);
  const double level = std::abs(z * z - 1.0);
  return level > sq.rho * sq.rho && level < sq.R * sq.R;
}

double bounding_radius(const MapSpec& map) {
  const MapSpec& root = root_map(map);
  if (const IdentityAnnulus* id = as_identity(root)) return id->R;
  const SqrtQuadratic& sq = std::get<SqrtQuadratic>(root);
  return std::sqrt(sq.R * sq.R + 1.0);
}

Complex map_eval(const MapSpec& map, Complex z) {
  if (!in_domain(map, z))
    throw Error(ErrorCode::PointOutsideDomain, "map_eval: z outside x-domain");
  if (as_identity(map)) return z;
  if (as_sqrtq(map)) return sqrtq_eval(z);
  const Composed& c = std::get<Composed>(map);
  const Complex base = map_eval(*c.base, z);
  switch (c.transform.kind) {
    case TransformKind::Scale: return c.transform.parameter * base;
    case TransformKind::Rotation:
      return std::polar(1.0, c.transform.parameter) * base;
    case TransformKind::Inversion: return 1.0 / base;
  }
  return base;
}

Complex deriv_eval(const MapSpec& map, Complex z) {
  if (!in_domain(map, z))
    throw Error(ErrorCode::PointOutsideDomain, "deriv_eval: z outside x-domain");
  if (as_identity(map)) return Complex(1.0, 0.0);
  if (as_sqrtq(map)) {
    // F^2 = z^2 - 1, so F' = z / F.
    return z / sqrtq_eval(z);
  }
  const Composed& c = std::get<Composed>(map);
  const Complex base_deriv = deriv_eval(*c.base, z);
  switch (c.transform.kind) {
    case TransformKind::Scale: return c.transform.parameter * base_deriv;
    case TransformKind::Rotation:
      return std::polar(1.0, c.transform.parameter) * base_deriv;
    case TransformKind::Inversion: {
      const Complex base = map_eval(*c.base, z);
      return -base_deriv / (base * base);
    }
  }
  return base_deriv;
}

AbsFields map_abs_fields(const MapSpec& map, Complex z) {
  if (as_identity(map)) return {std::abs(z), 1.0};
  if (as_sqrtq(map)) {
    const double m = std::abs(z * z - 1.0);
    return {std::sqrt(m), std::norm(z) / m};
  }
  const Composed& c = std::get<Composed>(map);
  const AbsFields base = map_abs_fields(*c.base, z);
  switch (c.transform.kind) {
    case TransformKind::Scale: {
      const double s = c.transform.parameter;
      return {s * base.abs_f, s * s * base.abs_fprime_sq};
    }
    case TransformKind::Rotation:
      return base;
    case TransformKind::Inversion: {
      const double f2 = base.abs_f * base.abs_f;
      return {1.0 / base.abs_f, base.abs_fprime_sq / (f2 * f2)};
    }
  }
  return base;
}

FrakValue frak_F(const MapSpec& map, Complex z) {
  if (!in_domain(map, z))
    throw Error(ErrorCode::PointOutsideDomain, "frak_F: z outside x-domain");
  const auto [rho, R] = annulus_radii(map);
  const AbsFields f = map_abs_fields(map, z);
  if (f.abs_f - rho < kBoundarySnap || R - f.abs_f < kBoundarySnap)
    throw Error(ErrorCode::AnnulusBoundary, "frak_F: |F(z)| on annulus boundary");
  const double log_part = -f.abs_fprime_sq / (f.abs_f * f.abs_f);
  const double inv_sum = 1.0 / (f.abs_f - rho) + 1.0 / (R - f.abs_f);
  const double boundary_part = f.abs_fprime_sq * inv_sum * inv_sum;
  return {log_part + boundary_part, log_part, boundary_part};
}

std::optional<double> frak_example_display(Complex z, double rho, double R) {
  const double z2 = std::norm(z);
  if (z2 <= 1.0) return std::nullopt;
  const double root = std::sqrt(z2 - 1.0);  // sqrt(|z|^2 - 1) as printed
  if (root <= rho || root >= R) return std::nullopt;
  const double m = std::abs(z * z - 1.0);
  const double dr = R - rho;
  return -z2 / (m * m) +
         z2 / m * dr * dr / ((root - rho) * (root - rho) * (R - root) * (R - root));
}

Complex sample_domain(const MapSpec& map, util::Rng& rng) {
  const double box = bounding_radius(map);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Complex z(rng.uniform(-box, box), rng.uniform(-box, box));
    if (in_domain(map, z)) return z;
  }
  throw Error(ErrorCode::SampleOutsideDomain,
              "rejection sampling failed to hit the domain");
}

double invariance_check(const MapSpec& map, const Transform& transform,
                        std::size_t samples, std::uint64_t seed) {
  if (transform.kind == TransformKind::Scale && !(transform.parameter > 0.0))
    throw Error(ErrorCode::ConfigInvalid, "scale factor must be positive");
  const MapSpec transformed = compose(map, transform);
  util::Rng rng(seed);
  double max_dev = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Complex z = sample_domain(map, rng);
    double v1, v2;
    try {
      v1 = frak_F(map, z).value;
      v2 = frak_F(transformed, z).value;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AnnulusBoundary) continue;
      throw;
    }
    max_dev = std::max(max_dev, std::fabs(v1 - v2));
  }
  return max_dev;
}

UnivalenceVerdict univalence_probe(const MapSpec& map, std::size_t pairs,
                                   std::uint64_t seed) {
  const double tol = 1e-6 * bounding_radius(map);
  return univalence_probe_fn(
      map, [&](Complex z) { return map_eval(map, z); }, pairs, seed, tol);
}

namespace {

// One point of the Cassini level loop |z^2-1| = c^2. For c > 1 the loop is
// star shaped about the origin; for c < 1 there are two loops around the
// branch points, selected by loop_sign.
Complex cassini_point(double c, double theta, int loop_sign) {
  const double c2 = c * c;
  if (c > 1.0) {
    const double s2 = std::sin(2.0 * theta);
    const double r2 = std::cos(2.0 * theta) + std::sqrt(c2 * c2 - s2 * s2);
    const double r = std::sqrt(r2);
    return Complex(r * std::cos(theta), r * std::sin(theta));
  }
  // Solve t*|t e^{i a} + 2| = c^2 for the loop around +1, then mirror.
  const double ca = std::cos(theta);
  double t = c2 / 2.0;
  for (int it = 0; it < 60; ++it) {
    const double mag = std::sqrt(t * t + 4.0 * t * ca + 4.0);
    const double g = t * mag - c2;
    const double dmag = (t + 2.0 * ca) / mag;
    const double dg = mag + t * dmag;
    const double step = g / dg;
    t -= step;
    if (std::fabs(step) < 1e-15 * (1.0 + t)) break;
  }
  const Complex w(t * ca, t * std::sin(theta));
  return loop_sign > 0 ? Complex(1.0, 0.0) + w : Complex(-1.0, 0.0) - w;
}

}  // namespace

int boundary_loop_count(const MapSpec& map) {
  const MapSpec& root = root_map(map);
  if (as_identity(root)) return 2;
  const SqrtQuadratic& sq = std::get<SqrtQuadratic>(root);
  return (sq.rho > 1.0 ? 1 : 2) + 1;
}

Complex boundary_loop_point(const MapSpec& map, int chart, double theta) {
  const MapSpec& root = root_map(map);
  const int count = boundary_loop_count(map);
  if (chart < 0 || chart >= count)
    throw Error(ErrorCode::ParameterOutOfRange, "boundary loop chart");
  if (const IdentityAnnulus* id = as_identity(root)) {
    const double r = chart == 0 ? id->rho : id->R;
    return Complex(r * std::cos(theta), r * std::sin(theta));
  }
  const SqrtQuadratic& sq = std::get<SqrtQuadratic>(root);
  if (chart == count - 1) return cassini_point(sq.R, theta, +1);
  if (sq.rho > 1.0) return cassini_point(sq.rho, theta, +1);
  return cassini_point(sq.rho, theta, chart == 0 ? +1 : -1);
}

BranchScan branch_scan(const MapSpec& map, int resolution) {
  const MapSpec& root = root_map(map);
  const auto [rho, R] = annulus_radii(root);
  const double levels[] = {0.5 * (rho + R), 0.75 * rho + 0.25 * R,
                           0.25 * rho + 0.75 * R};
  std::vector<std::vector<Complex>> loops;
  for (double c : levels) {
    if (as_identity(root)) {
      auto& loop = loops.emplace_back();
      for (int k = 0; k <= resolution; ++k) {
        const double th = 2.0 * M_PI * k / resolution;
        loop.emplace_back(c * std::cos(th), c * std::sin(th));
      }
    } else if (c > 1.0) {
      auto& loop = loops.emplace_back();
      for (int k = 0; k <= resolution; ++k)
        loop.push_back(cassini_point(c, 2.0 * M_PI * k / resolution, +1));
    } else {
      for (int sign : {+1, -1}) {
        auto& loop = loops.emplace_back();
        for (int k = 0; k <= resolution; ++k)
          loop.push_back(cassini_point(c, 2.0 * M_PI * k / resolution, sign));
      }
    }
  }
  for (const auto& loop : loops) {
    for (std::size_t i = 1; i < loop.size(); ++i) {
      const Complex f0 = map_eval(map, loop[i - 1]);
      const Complex f1 = map_eval(map, loop[i]);
      const double scale = 0.5 * std::max(std::abs(f0), std::abs(f1));
      if (std::abs(f1 - f0) > scale) return {true, loop[i]};
    }
  }
  return {};
}

void require_branch_continuous(const MapSpec& map, int resolution) {
  const BranchScan scan = branch_scan(map, resolution);
  if (scan.discontinuity_found)
    throw Error(ErrorCode::BranchDiscontinuity,
                "branch jump near z = (" + std::to_string(scan.where.real()) +
                    ", " + std::to_string(scan.where.imag()) + ")");
}

}  // namespace hardylab::conformal
