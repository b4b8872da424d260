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

#ifndef HARDYLAB_HARDY_QUADRATURE_HPP
#define HARDYLAB_HARDY_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "hardylab/core/types.hpp"

namespace hardylab::hardy {

enum class Scheme { Auto, Radial1D, TensorGrid, MonteCarlo };

const char* scheme_name(Scheme scheme);
Scheme parse_scheme(const std::string& name);

struct QuadratureSpec {
  Scheme scheme = Scheme::Auto;
  int resolution = 0;  // per axis; 0 picks the per-scheme default
  std::uint64_t seed = 1;
};

/// Resolution >= 64 per axis when set explicitly.
void validate(const QuadratureSpec& quad);

struct Integral {
  double value = 0.0;   // refined (doubled resolution) result
  double coarse = 0.0;  // base resolution result
  bool converged = true;

  double rel_change() const {
    const double scale = std::max(std::fabs(value), 1e-300);
    return std::fabs(value - coarse) / scale;
  }
};

/// Midpoint rule on [lo, hi]; f includes the measure. Cells are accumulated
/// with a fixed-tree pairwise sum, so the result does not depend on
/// evaluation order.
double integrate_interval(double lo, double hi, int n,
                          const std::function<double(double)>& f);

/// Tensor midpoint rule on [lo1, hi1] x [lo2, hi2]; rows run in parallel.
double integrate_rect(double lo1, double hi1, double lo2, double hi2, int n1,
                      int n2, const std::function<double(double, double)>& f);

/// Runs eval at res and 2*res and flags refinement agreement.
Integral with_refinement(int res, const std::function<double(int)>& eval);

/// Plain Monte Carlo over a box; f must vanish outside the support.
double integrate_mc_box(const double lo[3], const double hi[3], int dim,
                        std::size_t samples, std::uint64_t seed,
                        const std::function<double(const Point&)>& f);

}  // namespace hardylab::hardy

#endif  // HARDYLAB_HARDY_QUADRATURE_HPP
