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

#ifndef HARDYLAB_CONFORMAL_MAP_HPP
#define HARDYLAB_CONFORMAL_MAP_HPP

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "hardylab/core/types.hpp"
#include "hardylab/core/util.hpp"

namespace hardylab::conformal {

using Complex = std::complex<double>;

/// The identity on the annulus rho < |z| < R.
struct IdentityAnnulus {
  double rho;
  double R;
};

/// F(z) = sqrt((z-1)(z+1)) on { rho^2 < |z^2-1| < R^2 }, mapped onto the
/// (rho, R) annulus. The branch is odd, positive on the real axis right of
/// z = 1, and continuous off the real segment between the branch points;
/// |F| and F' magnitudes are branch independent.
struct SqrtQuadratic {
  double rho;
  double R;
};

enum class TransformKind { Scale, Rotation, Inversion };

struct Transform {
  TransformKind kind;
  double parameter = 1.0;  // scale factor or rotation angle; unused for inversion
};

struct Composed;

using MapSpec = std::variant<IdentityAnnulus, SqrtQuadratic, Composed>;

/// Post-composition with a scaling, rotation, or inversion of the target
/// annulus. The annulus radii transform accordingly.
struct Composed {
  std::shared_ptr<const MapSpec> base;
  Transform transform;
};

MapSpec compose(MapSpec base, Transform transform);

void validate(const MapSpec& map);
std::string map_name(const MapSpec& map);
const char* transform_name(TransformKind kind);

/// Target annulus radii (rho, R).
std::pair<double, double> annulus_radii(const MapSpec& map);

bool in_domain(const MapSpec& map, Complex z);

/// Half-width of a square centered at the origin that contains the x-domain.
double bounding_radius(const MapSpec& map);

Complex map_eval(const MapSpec& map, Complex z);
Complex deriv_eval(const MapSpec& map, Complex z);

/// |F(z)| and |F'(z)|^2, branch independent.
struct AbsFields {
  double abs_f;
  double abs_fprime_sq;
};
AbsFields map_abs_fields(const MapSpec& map, Complex z);

struct FrakValue {
  double value;
  double log_part;       // -|F'|^2 / |F|^2
  double boundary_part;  // |F'|^2 * (1/(|F|-rho) + 1/(R-|F|))^2
};

/// The doubly connected weight of the target annulus pulled back through F.
FrakValue frak_F(const MapSpec& map, Complex z);

/// The printed closed form for the sqrt-quadratic example, taken verbatim
/// with the sqrt(|z|^2 - 1) factors. Requires |z| > 1. It matches frak_F on
/// the real axis and deviates off it; frak_eval keeps the defining formula as
/// ground truth. Returns nullopt where the printed expression is undefined.
std::optional<double> frak_example_display(Complex z, double rho, double R);

/// Uniform sample from the x-domain (rejection from the bounding square).
Complex sample_domain(const MapSpec& map, util::Rng& rng);

/// Max |frak_F(via map) - frak_F(via transformed map)| over random samples.
double invariance_check(const MapSpec& map, const Transform& transform,
                        std::size_t samples, std::uint64_t seed);

struct UnivalenceVerdict {
  bool collision_found = false;
  Complex z1{};
  Complex z2{};
};

UnivalenceVerdict univalence_probe(const MapSpec& map, std::size_t pairs,
                                   std::uint64_t seed);

/// Same probe against an arbitrary evaluator; used to exercise deliberately
/// non-univalent controls.
template <typename F>
UnivalenceVerdict univalence_probe_fn(const MapSpec& sampler_domain, F&& f,
                                      std::size_t pairs, std::uint64_t seed,
                                      double tol) {
  util::Rng rng(seed);
  double fp_scale = 0.0;
  for (int i = 0; i < 32; ++i) {
    const Complex z = sample_domain(sampler_domain, rng);
    fp_scale = std::max(fp_scale, std::abs(f(z)));
  }
  if (fp_scale == 0.0) fp_scale = 1.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Complex z1 = sample_domain(sampler_domain, rng);
    const Complex z2 = sample_domain(sampler_domain, rng);
    if (std::abs(z1 - z2) <= tol) continue;
    if (std::abs(f(z1) - f(z2)) < tol * fp_scale)
      return {true, z1, z2};
  }
  return {};
}

/// Number of boundary loops of the x-domain. Loops are ordered inner level
/// first (two loops around the branch points when the inner level of a
/// sqrt-quadratic domain sits below 1), outer level last.
int boundary_loop_count(const MapSpec& map);

/// Point of boundary loop `chart` at angle parameter theta in [0, 2*pi).
Complex boundary_loop_point(const MapSpec& map, int chart, double theta);

struct BranchScan {
  bool discontinuity_found = false;
  Complex where{};
};

/// Walks the level loops of |F| and looks for adjacent-sample jumps larger
/// than half the local |F| scale. For sqrt-quadratic domains with rho < 1 the
/// odd branch necessarily cuts across the real segment between the branch
/// points; the scan reports it, and callers that only consume |F| carry on.
BranchScan branch_scan(const MapSpec& map, int resolution);

/// Throws branch-discontinuity-detected if the scan finds a jump.
void require_branch_continuous(const MapSpec& map, int resolution = 256);

}  // namespace hardylab::conformal

#endif  // HARDYLAB_CONFORMAL_MAP_HPP
