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

#ifndef HARDYLAB_CORE_TYPES_HPP
#define HARDYLAB_CORE_TYPES_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hardylab {

/// Point in R^2 or R^3; 2-d domains keep z == 0.
using Point = std::array<double, 3>;

inline Point operator+(const Point& a, const Point& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Point operator-(const Point& a, const Point& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Point operator*(double s, const Point& a) {
  return {s * a[0], s * a[1], s * a[2]};
}
inline double dot(const Point& a, const Point& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm(const Point& a) { return std::sqrt(dot(a, a)); }

enum class ErrorCode {
  PointOutsideDomain,
  FailedMinimization,
  ParameterOutOfRange,
  OnRidge,
  StencilLeavesDomain,
  StencilCrossesRidge,
  MarchExceedsTruncation,
  InadmissiblePoint,
  DomainVariantMismatch,
  InadmissibleCombination,
  BandTouchesRidge,
  BandEmpty,
  QuadratureUnconverged,
  AlphaOutOfRange,
  AnnulusBoundary,
  BranchDiscontinuity,
  SampleOutsideDomain,
  SearchBudgetExhausted,
  ConfigInvalid,
};

const char* error_code_name(ErrorCode code);

/// All recoverable failures surface as this; the CLI maps ConfigInvalid to
/// exit 2 and everything else to exit 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Support band in units of the boundary distance. On two-boundary domains
/// (annulus) the profile may follow the distance to a single side instead of
/// min of both.
enum class BandSide { Auto, Inner, Outer };

struct Band {
  double a = 0.0;
  double b = 0.0;
  BandSide side = BandSide::Auto;

  double width() const { return b - a; }
};

const char* band_side_name(BandSide side);

namespace tol {
// Two near-point candidates count as equal minimizers below this gap.
inline double near_point_gap(double delta) {
  return std::max(1e-9, 1e-7 * delta);
}
inline constexpr double ridge_eps = 1e-3;       // is_near_ridge default band
inline constexpr double fd_h_factor = 1e-4;     // FD step = factor * scale
inline constexpr double quad_rel = 1e-3;        // refinement agreement
inline constexpr double ratio_slack = 3e-3;     // verified ratios >= 1 - slack
inline constexpr double algebra = 1e-12;        // closed-form identities
inline constexpr double frak_invariance = 1e-10;
inline constexpr double refine_rel = 1e-12;     // boundary minimizer refinement
}  // namespace tol

}  // namespace hardylab

#endif  // HARDYLAB_CORE_TYPES_HPP
