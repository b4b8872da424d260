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

// AVX2 variants of the batch kernels. This translation unit is the only one
// compiled with -mavx2 -mfma; callers reach it through the runtime dispatch
// in simd.cpp.

#ifdef HARDYLAB_HAVE_AVX2

#include <immintrin.h>

#include <cmath>

#include "hardylab/simd/kernels.hpp"

namespace hardylab::simd {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d abs_pd(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

void radial_distance_avx2(const RadialShape& shape, const double* s,
                          double* delta, std::size_t n) {
  std::size_t i = 0;
  switch (shape.kind) {
    case RadialKind::Disc:
    case RadialKind::Cylinder: {
      const __m256d outer = _mm256_set1_pd(shape.outer);
      for (; i + kLanes <= n; i += kLanes)
        _mm256_storeu_pd(delta + i,
                         _mm256_sub_pd(outer, _mm256_loadu_pd(s + i)));
      for (; i < n; ++i) delta[i] = shape.outer - s[i];
      break;
    }
    case RadialKind::Annulus: {
      const __m256d inner = _mm256_set1_pd(shape.inner);
      const __m256d outer = _mm256_set1_pd(shape.outer);
      for (; i + kLanes <= n; i += kLanes) {
        const __m256d sv = _mm256_loadu_pd(s + i);
        _mm256_storeu_pd(delta + i, _mm256_min_pd(_mm256_sub_pd(sv, inner),
                                                  _mm256_sub_pd(outer, sv)));
      }
      for (; i < n; ++i)
        delta[i] = std::min(s[i] - shape.inner, shape.outer - s[i]);
      break;
    }
    case RadialKind::ExteriorDisc: {
      const __m256d inner = _mm256_set1_pd(shape.inner);
      for (; i + kLanes <= n; i += kLanes)
        _mm256_storeu_pd(delta + i,
                         _mm256_sub_pd(_mm256_loadu_pd(s + i), inner));
      for (; i < n; ++i) delta[i] = s[i] - shape.inner;
      break;
    }
  }
}

void radial_laplacian_avx2(const RadialShape& shape, const double* s,
                           double* lap, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  switch (shape.kind) {
    case RadialKind::Disc:
    case RadialKind::Cylinder: {
      const __m256d minus_one = _mm256_set1_pd(-1.0);
      for (; i + kLanes <= n; i += kLanes)
        _mm256_storeu_pd(lap + i,
                         _mm256_div_pd(minus_one, _mm256_loadu_pd(s + i)));
      for (; i < n; ++i) lap[i] = -1.0 / s[i];
      break;
    }
    case RadialKind::Annulus: {
      const __m256d mid = _mm256_set1_pd(0.5 * (shape.inner + shape.outer));
      for (; i + kLanes <= n; i += kLanes) {
        const __m256d sv = _mm256_loadu_pd(s + i);
        const __m256d inv = _mm256_div_pd(one, sv);
        const __m256d inner_side = _mm256_cmp_pd(sv, mid, _CMP_LT_OQ);
        _mm256_storeu_pd(
            lap + i,
            _mm256_blendv_pd(_mm256_sub_pd(_mm256_setzero_pd(), inv), inv,
                             inner_side));
      }
      const double mid_s = 0.5 * (shape.inner + shape.outer);
      for (; i < n; ++i) lap[i] = s[i] < mid_s ? 1.0 / s[i] : -1.0 / s[i];
      break;
    }
    case RadialKind::ExteriorDisc: {
      for (; i + kLanes <= n; i += kLanes)
        _mm256_storeu_pd(lap + i,
                         _mm256_div_pd(one, _mm256_loadu_pd(s + i)));
      for (; i < n; ++i) lap[i] = 1.0 / s[i];
      break;
    }
  }
}

void bracket_weight_avx2(const double* delta, const double* lap, double coef,
                         bool absolute, double* w, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d c = _mm256_set1_pd(coef);
  std::size_t i = 0;
  if (absolute) {
    for (; i + kLanes <= n; i += kLanes) {
      const __m256d prod = abs_pd(_mm256_mul_pd(_mm256_loadu_pd(delta + i),
                                                _mm256_loadu_pd(lap + i)));
      _mm256_storeu_pd(w + i, _mm256_fmadd_pd(c, prod, one));
    }
    for (; i < n; ++i) w[i] = 1.0 + coef * std::fabs(delta[i] * lap[i]);
  } else {
    for (; i + kLanes <= n; i += kLanes) {
      const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(delta + i),
                                         _mm256_loadu_pd(lap + i));
      _mm256_storeu_pd(w + i, _mm256_fnmadd_pd(c, prod, one));
    }
    for (; i < n; ++i) w[i] = 1.0 - coef * (delta[i] * lap[i]);
  }
}

void al_weight_avx2(const double* s, double rho, double R, double nfac,
                    double* w, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d rhov = _mm256_set1_pd(rho);
  const __m256d Rv = _mm256_set1_pd(R);
  const __m256d nf = _mm256_set1_pd(nfac);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d sv = _mm256_loadu_pd(s + i);
    const __m256d d1 = _mm256_sub_pd(sv, rhov);
    const __m256d d2 = _mm256_sub_pd(Rv, sv);
    const __m256d t0 = _mm256_div_pd(nf, _mm256_mul_pd(sv, sv));
    const __m256d t1 = _mm256_div_pd(one, _mm256_mul_pd(d1, d1));
    const __m256d t2 = _mm256_div_pd(one, _mm256_mul_pd(d2, d2));
    const __m256d t3 = _mm256_div_pd(two, _mm256_mul_pd(d1, d2));
    _mm256_storeu_pd(
        w + i, _mm256_add_pd(_mm256_add_pd(t0, t1), _mm256_add_pd(t2, t3)));
  }
  for (; i < n; ++i) {
    const double d1 = s[i] - rho;
    const double d2 = R - s[i];
    w[i] = nfac / (s[i] * s[i]) + 1.0 / (d1 * d1) + 1.0 / (d2 * d2) +
           2.0 / (d1 * d2);
  }
}

void cassini_fields_avx2(const double* re, const double* im, double* cval,
                         double* fp2, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(re + i);
    const __m256d y = _mm256_loadu_pd(im + i);
    const __m256d xx = _mm256_mul_pd(x, x);
    const __m256d yy = _mm256_mul_pd(y, y);
    const __m256d u = _mm256_sub_pd(_mm256_sub_pd(xx, yy), one);
    const __m256d v = _mm256_mul_pd(_mm256_mul_pd(x, y), _mm256_set1_pd(2.0));
    const __m256d m = _mm256_sqrt_pd(
        _mm256_add_pd(_mm256_mul_pd(u, u), _mm256_mul_pd(v, v)));
    _mm256_storeu_pd(cval + i, _mm256_sqrt_pd(m));
    _mm256_storeu_pd(fp2 + i, _mm256_div_pd(_mm256_add_pd(xx, yy), m));
  }
  for (; i < n; ++i) {
    const double u = re[i] * re[i] - im[i] * im[i] - 1.0;
    const double v = 2.0 * re[i] * im[i];
    const double m = std::sqrt(u * u + v * v);
    cval[i] = std::sqrt(m);
    fp2[i] = (re[i] * re[i] + im[i] * im[i]) / m;
  }
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels table = {
      radial_distance_avx2, radial_laplacian_avx2, bracket_weight_avx2,
      al_weight_avx2,       cassini_fields_avx2,
  };
  return table;
}

}  // namespace hardylab::simd

#endif  // HARDYLAB_HAVE_AVX2
