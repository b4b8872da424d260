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

// The AVX2 kernels must agree with the scalar references to rounding.

#include <cmath>
#include <vector>

#include <doctest.h>

#include "hardylab/core/util.hpp"
#include "hardylab/simd/kernels.hpp"

using namespace hardylab;
using simd::RadialKind;
using simd::RadialShape;

namespace {

constexpr double kRelTol = 1e-13;

void check_close(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max({std::fabs(a[i]), std::fabs(b[i]), 1.0});
    CHECK(std::fabs(a[i] - b[i]) <= kRelTol * scale);
  }
}

std::vector<double> radii(std::size_t n, double lo, double hi,
                          std::uint64_t seed) {
  util::Rng rng(seed);
  std::vector<double> s(n);
  for (double& v : s) v = rng.uniform(lo, hi);
  return s;
}

}  // namespace

TEST_CASE("scalar radial kernels match the closed forms") {
  const auto& K = simd::scalar_kernels();
  const RadialShape annulus{RadialKind::Annulus, 1.0, 3.0};
  const std::vector<double> s = {1.2, 1.9, 2.1, 2.9};
  std::vector<double> delta(s.size()), lap(s.size());
  K.radial_distance(annulus, s.data(), delta.data(), s.size());
  K.radial_laplacian(annulus, s.data(), lap.data(), s.size());
  CHECK(delta[0] == doctest::Approx(0.2));
  CHECK(delta[3] == doctest::Approx(0.1));
  CHECK(lap[0] == doctest::Approx(1.0 / 1.2));   // inner side
  CHECK(lap[2] == doctest::Approx(-1.0 / 2.1));  // outer side

  std::vector<double> w(s.size());
  K.bracket_weight(delta.data(), lap.data(), 2.0, false, w.data(), s.size());
  CHECK(w[0] == doctest::Approx(1.0 - 2.0 * 0.2 / 1.2));

  std::vector<double> cw(s.size());
  K.al_weight(s.data(), 1.0, 3.0, -1.0, cw.data(), s.size());
  const double d1 = 1.2 - 1.0, d2 = 3.0 - 1.2;
  CHECK(cw[0] == doctest::Approx(-1.0 / (1.2 * 1.2) + 1.0 / (d1 * d1) +
                                 1.0 / (d2 * d2) + 2.0 / (d1 * d2)));
}

TEST_CASE("avx2 kernels agree with scalar references") {
  if (!simd::avx2_available()) {
    MESSAGE("avx2 unavailable; dispatch falls back to scalar");
    const auto& a = simd::kernels_for(simd::Level::Avx2);
    const auto& b = simd::scalar_kernels();
    CHECK(&a == &b);
    return;
  }
  const auto& sc = simd::kernels_for(simd::Level::Scalar);
  const auto& vx = simd::kernels_for(simd::Level::Avx2);

  const std::vector<RadialShape> shapes = {
      {RadialKind::Disc, 0.0, 2.0},
      {RadialKind::Annulus, 1.0, 3.0},
      {RadialKind::ExteriorDisc, 1.0, 0.0},
      {RadialKind::Cylinder, 0.0, 1.5},
  };
  for (std::size_t n : {1u, 3u, 4u, 17u, 1024u}) {
    for (const RadialShape& shape : shapes) {
      const double lo = shape.kind == RadialKind::ExteriorDisc ? 1.01 : 0.05;
      const double hi = shape.kind == RadialKind::Annulus ? 2.99 : 1.45;
      const auto s = radii(n, lo, hi, 1000 + n);
      std::vector<double> da(n), db(n), la(n), lb(n), wa(n), wb(n);
      sc.radial_distance(shape, s.data(), da.data(), n);
      vx.radial_distance(shape, s.data(), db.data(), n);
      check_close(da, db);
      sc.radial_laplacian(shape, s.data(), la.data(), n);
      vx.radial_laplacian(shape, s.data(), lb.data(), n);
      check_close(la, lb);
      sc.bracket_weight(da.data(), la.data(), 1.5, false, wa.data(), n);
      vx.bracket_weight(db.data(), lb.data(), 1.5, false, wb.data(), n);
      check_close(wa, wb);
      sc.bracket_weight(da.data(), la.data(), 3.0, true, wa.data(), n);
      vx.bracket_weight(db.data(), lb.data(), 3.0, true, wb.data(), n);
      check_close(wa, wb);
    }
    const auto s = radii(n, 1.1, 2.9, 77 + n);
    std::vector<double> wa(n), wb(n);
    sc.al_weight(s.data(), 1.0, 3.0, -1.0, wa.data(), n);
    vx.al_weight(s.data(), 1.0, 3.0, -1.0, wb.data(), n);
    check_close(wa, wb);

    const auto re = radii(n, -2.0, 2.0, 5 + n);
    const auto im = radii(n, -2.0, 2.0, 6 + n);
    std::vector<double> ca(n), cb(n), fa(n), fb(n);
    sc.cassini_fields(re.data(), im.data(), ca.data(), fa.data(), n);
    vx.cassini_fields(re.data(), im.data(), cb.data(), fb.data(), n);
    check_close(ca, cb);
    check_close(fa, fb);
  }
}

TEST_CASE("cassini fields agree with complex arithmetic") {
  const auto& K = simd::scalar_kernels();
  util::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const double re = rng.uniform(-2.5, 2.5);
    const double im = rng.uniform(-2.5, 2.5);
    const std::complex<double> z(re, im);
    double c, fp2;
    K.cassini_fields(&re, &im, &c, &fp2, 1);
    const double m = std::abs(z * z - 1.0);
    if (m < 1e-6) continue;
    CHECK(c == doctest::Approx(std::sqrt(m)).epsilon(1e-13));
    CHECK(fp2 == doctest::Approx(std::norm(z) / m).epsilon(1e-13));
  }
}
