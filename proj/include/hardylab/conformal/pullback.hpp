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

#ifndef HARDYLAB_CONFORMAL_PULLBACK_HPP
#define HARDYLAB_CONFORMAL_PULLBACK_HPP

#include "hardylab/conformal/map.hpp"
#include "hardylab/hardy/profile.hpp"
#include "hardylab/hardy/quadrature.hpp"

namespace hardylab::conformal {

struct PullbackReport {
  std::string map;
  std::string profile;
  Band band;
  int resolution = 0;

  // x-domain side (through the map) and annulus side (reference).
  double lhs_x = 0.0, rhs_x = 0.0;
  double lhs_y = 0.0, rhs_y = 0.0;
  double ratio = 0.0;          // lhs_x / rhs_x
  double cov_lhs_rel = 0.0;    // |lhs_x - lhs_y| / lhs_y
  double cov_rhs_rel = 0.0;
  bool converged = true;
  bool branch_cut = false;     // odd branch cuts the real segment (rho < 1)
  bool passed = false;
};

/// Verifies the doubly connected inequality by pulling an annulus test
/// function back through the map: the x-side Dirichlet integral against a
/// quarter of the invariant weight, plus the change-of-variables identity
/// between the two sides.
PullbackReport pullback_verify(const MapSpec& map,
                               const hardy::TestProfile& profile,
                               const Band& band,
                               const hardy::QuadratureSpec& quad);

}  // namespace hardylab::conformal

#endif  // HARDYLAB_CONFORMAL_PULLBACK_HPP
