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

#include "hardylab/hardy/quadrature.hpp"

#include <vector>

#include "hardylab/core/util.hpp"

namespace hardylab::hardy {

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Auto: return "auto";
    case Scheme::Radial1D: return "radial-1d";
    case Scheme::TensorGrid: return "tensor-grid-midpoint";
    case Scheme::MonteCarlo: return "monte-carlo";
  }
  return "auto";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "auto") return Scheme::Auto;
  if (name == "radial-1d" || name == "radial") return Scheme::Radial1D;
  if (name == "tensor-grid-midpoint" || name == "grid") return Scheme::TensorGrid;
  if (name == "monte-carlo" || name == "mc") return Scheme::MonteCarlo;
  throw Error(ErrorCode::ConfigInvalid, "unknown quadrature scheme: " + name);
}

void validate(const QuadratureSpec& quad) {
  if (quad.resolution != 0 && quad.resolution < 64)
    throw Error(ErrorCode::ConfigInvalid, "resolution must be at least 64 per axis");
}

double integrate_interval(double lo, double hi, int n,
                          const std::function<double(double)>& f) {
  if (!(hi > lo) || n <= 0) return 0.0;
  const double h = (hi - lo) / n;
  std::vector<double> cells(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cells[i] = f(lo + (i + 0.5) * h) * h;
  return util::pairwise_sum(cells);
}

double integrate_rect(double lo1, double hi1, double lo2, double hi2, int n1,
                      int n2, const std::function<double(double, double)>& f) {
  if (!(hi1 > lo1) || !(hi2 > lo2) || n1 <= 0 || n2 <= 0) return 0.0;
  const double h1 = (hi1 - lo1) / n1;
  const double h2 = (hi2 - lo2) / n2;
  std::vector<double> cells(static_cast<std::size_t>(n1) * n2);
  util::parallel_for(static_cast<std::size_t>(n1), [&](std::size_t i) {
    const double u = lo1 + (i + 0.5) * h1;
    for (int j = 0; j < n2; ++j) {
      const double v = lo2 + (j + 0.5) * h2;
      cells[i * n2 + j] = f(u, v) * h1 * h2;
    }
  });
  return util::pairwise_sum(cells);
}

Integral with_refinement(int res, const std::function<double(int)>& eval) {
  Integral out;
  out.coarse = eval(res);
  out.value = eval(2 * res);
  out.converged = out.rel_change() < tol::quad_rel;
  return out;
}

double integrate_mc_box(const double lo[3], const double hi[3], int dim,
                        std::size_t samples, std::uint64_t seed,
                        const std::function<double(const Point&)>& f) {
  util::Rng rng(seed);
  double volume = 1.0;
  for (int d = 0; d < dim; ++d) volume *= hi[d] - lo[d];
  std::vector<double> cells(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    Point x{0.0, 0.0, 0.0};
    for (int d = 0; d < dim; ++d) x[d] = rng.uniform(lo[d], hi[d]);
    cells[i] = f(x);
  }
  return volume * util::pairwise_sum(cells) / static_cast<double>(samples);
}

}  // namespace hardylab::hardy
