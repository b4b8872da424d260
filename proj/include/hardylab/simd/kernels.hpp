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

#ifndef HARDYLAB_SIMD_KERNELS_HPP
#define HARDYLAB_SIMD_KERNELS_HPP

#include <cstddef>

#include "hardylab/simd/simd.hpp"

namespace hardylab::simd {

// Batch kernels for the quadrature inner loops. Every kernel has a scalar
// reference implementation and an AVX2 variant selected at runtime; the two
// are equivalence-tested. Transcendental profile evaluation (exp/pow) stays
// scalar on purpose.

/// Domains whose distance field is a closed form of the in-plane radius s.
enum class RadialKind { Disc, Annulus, ExteriorDisc, Cylinder };

struct RadialShape {
  RadialKind kind;
  double inner = 0.0;  // rho for Annulus/ExteriorDisc
  double outer = 0.0;  // R for Disc/Annulus, r for Cylinder
};

struct Kernels {
  /// delta[i] = distance from the point at radius s[i] to the boundary.
  void (*radial_distance)(const RadialShape& shape, const double* s,
                          double* delta, std::size_t n);
  /// lap[i] = Laplacian of the distance field at radius s[i] (off-ridge
  /// closed form; the midradius of an annulus takes the inner-side value).
  void (*radial_laplacian)(const RadialShape& shape, const double* s,
                           double* lap, std::size_t n);
  /// w[i] = 1 - coef*delta[i]*lap[i], or 1 + coef*|delta[i]*lap[i]| when
  /// absolute is set.
  void (*bracket_weight)(const double* delta, const double* lap, double coef,
                         bool absolute, double* w, std::size_t n);
  /// Two-boundary annulus weight at radius s[i]:
  ///   nfac/s^2 + 1/d1^2 + 1/d2^2 + 2/(d1*d2), d1 = s-rho, d2 = R-s.
  void (*al_weight)(const double* s, double rho, double R, double nfac,
                    double* w, std::size_t n);
  /// Level value c = |z^2-1|^(1/2) and conformal factor fp2 = |z|^2/c^2 for
  /// z = re + i*im.
  void (*cassini_fields)(const double* re, const double* im, double* cval,
                         double* fp2, std::size_t n);
};

/// Kernel table for the active level.
const Kernels& kernels();

/// Kernel table for a specific level (equivalence tests). Requesting Avx2
/// when unavailable returns the scalar table.
const Kernels& kernels_for(Level level);

const Kernels& scalar_kernels();
#ifdef HARDYLAB_HAVE_AVX2
const Kernels& avx2_kernels();
#endif

}  // namespace hardylab::simd

#endif  // HARDYLAB_SIMD_KERNELS_HPP
