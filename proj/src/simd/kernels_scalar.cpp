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

// Scalar reference kernels. The AVX2 variants in kernels_avx2.cpp must match
// these within rounding; see the simd equivalence tests.

#include <cmath>

#include "hardylab/simd/kernels.hpp"

namespace hardylab::simd {

namespace {

void radial_distance_scalar(const RadialShape& shape, const double* s,
                            double* delta, std::size_t n) {
  switch (shape.kind) {
    case RadialKind::Disc:
      for (std::size_t i = 0; i < n; ++i) delta[i] = shape.outer - s[i];
      break;
    case RadialKind::Annulus:
      for (std::size_t i = 0; i < n; ++i)
        delta[i] = std::min(s[i] - shape.inner, shape.outer - s[i]);
      break;
    case RadialKind::ExteriorDisc:
      for (std::size_t i = 0; i < n; ++i) delta[i] = s[i] - shape.inner;
      break;
    case RadialKind::Cylinder:
      for (std::size_t i = 0; i < n; ++i) delta[i] = shape.outer - s[i];
      break;
  }
}

void radial_laplacian_scalar(const RadialShape& shape, const double* s,
                             double* lap, std::size_t n) {
  switch (shape.kind) {
    case RadialKind::Disc:
    case RadialKind::Cylinder:
      for (std::size_t i = 0; i < n; ++i) lap[i] = -1.0 / s[i];
      break;
    case RadialKind::Annulus: {
      const double mid = 0.5 * (shape.inner + shape.outer);
      for (std::size_t i = 0; i < n; ++i)
        lap[i] = s[i] < mid ? 1.0 / s[i] : -1.0 / s[i];
      break;
    }
    case RadialKind::ExteriorDisc:
      for (std::size_t i = 0; i < n; ++i) lap[i] = 1.0 / s[i];
      break;
  }
}

void bracket_weight_scalar(const double* delta, const double* lap, double coef,
                           bool absolute, double* w, std::size_t n) {
  if (absolute) {
    for (std::size_t i = 0; i < n; ++i)
      w[i] = 1.0 + coef * std::fabs(delta[i] * lap[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      w[i] = 1.0 - coef * (delta[i] * lap[i]);
  }
}

void al_weight_scalar(const double* s, double rho, double R, double nfac,
                      double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d1 = s[i] - rho;
    const double d2 = R - s[i];
    w[i] = nfac / (s[i] * s[i]) + 1.0 / (d1 * d1) + 1.0 / (d2 * d2) +
           2.0 / (d1 * d2);
  }
}

void cassini_fields_scalar(const double* re, const double* im, double* cval,
                           double* fp2, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double u = re[i] * re[i] - im[i] * im[i] - 1.0;
    const double v = 2.0 * re[i] * im[i];
    const double m = std::sqrt(u * u + v * v);  // |z^2 - 1|
    cval[i] = std::sqrt(m);
    fp2[i] = (re[i] * re[i] + im[i] * im[i]) / m;
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table = {
      radial_distance_scalar, radial_laplacian_scalar, bracket_weight_scalar,
      al_weight_scalar,       cassini_fields_scalar,
  };
  return table;
}

}  // namespace hardylab::simd
