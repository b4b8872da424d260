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

#include <cmath>

#include <doctest.h>

#include "hardylab/hardy/profile.hpp"

using namespace hardylab;
using namespace hardylab::hardy;

namespace {

const geom::DomainSpec kDisc = geom::Disc{1.0};

void check_c1(const TestFunction& f, double lo, double hi) {
  util::Rng rng(3);
  const double h = 1e-6;
  for (int i = 0; i < 200; ++i) {
    const double d = rng.uniform(lo + 2.0 * h, hi - 2.0 * h);
    const double fd = (f.value(d + h) - f.value(d - h)) / (2.0 * h);
    CHECK(f.deriv(d) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
  }
}

}  // namespace

TEST_CASE("smooth bump vanishes outside and peaks inside") {
  const TestFunction f = make_test_function(SmoothBump{}, kDisc, {0.1, 0.6});
  CHECK(f.value(0.05) == 0.0);
  CHECK(f.value(0.7) == 0.0);
  CHECK(f.deriv(0.099999) == 0.0);
  CHECK(f.value(0.35) == doctest::Approx(1.0));  // normalized peak
  CHECK(f.value(0.2) > 0.0);
  check_c1(f, 0.1, 0.6);
  // f(x) = eta(delta(x)) on the domain.
  CHECK(f.value_at(kDisc, {0.65, 0.0, 0.0}) == doctest::Approx(f.value(0.35)));
}

TEST_CASE("power bump is C1 with vanishing ends") {
  const TestFunction f =
      make_test_function(PowerBump{0.5}, kDisc, {0.05, 0.8});
  CHECK(f.value(0.05) == 0.0);
  CHECK(f.value(0.8) == 0.0);
  CHECK(f.value(0.4) > 0.0);
  check_c1(f, 0.05, 0.8);
}

TEST_CASE("pchip interpolates tables monotonically") {
  Pchip p({0.0, 1.0, 2.0, 3.0, 4.0}, {0.0, 0.0, 1.0, 2.0, 2.0});
  CHECK(p.value(2.0) == doctest::Approx(1.0));
  CHECK(p.value(0.5) == doctest::Approx(0.0));
  double prev = -1e-12;
  for (int i = 1; i < 400; ++i) {
    const double x = 4.0 * i / 400.0;
    const double v = p.value(x);
    CHECK(v >= prev - 1e-12);  // monotone data -> monotone interpolant
    prev = v;
  }
  // Flat-zero ends give vanishing value and slope.
  CHECK(p.value(0.9) == doctest::Approx(0.0));
  CHECK(p.deriv(0.9) == doctest::Approx(0.0));
}

TEST_CASE("radial custom profile maps its table onto the band") {
  RadialCustom table;
  table.deltas = {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
  table.values = {0.0, 0.0, 0.8, 1.0, 0.8, 0.0, 0.0};
  const TestFunction f = make_test_function(table, kDisc, {0.2, 0.7});
  CHECK(f.value(0.2) == 0.0);
  CHECK(f.value(0.7) == 0.0);
  CHECK(f.value(0.2 + 0.5 * 0.5) == doctest::Approx(1.0));  // table midpoint
  check_c1(f, 0.2, 0.7);
}

TEST_CASE("band validation") {
  CHECK_THROWS_WITH_AS(make_test_function(SmoothBump{}, kDisc, {0.6, 0.1}),
                       doctest::Contains("band-empty"), Error);
  CHECK_THROWS_AS(make_test_function(SmoothBump{}, kDisc, {0.0, 0.5}), Error);
  CHECK_THROWS_WITH_AS(make_test_function(SmoothBump{}, kDisc, {0.1, 1.2}),
                       doctest::Contains("band-touches-ridge"), Error);
  const geom::DomainSpec annulus = geom::Annulus{1.0, 3.0};
  CHECK_THROWS_AS(
      make_test_function(SmoothBump{}, annulus, {0.1, 1.5}),  // beyond ridge
      Error);
  // One-sided bands may pass the midradius but not the far boundary.
  CHECK_NOTHROW(
      make_test_function(SmoothBump{}, annulus, {0.1, 1.5, BandSide::Inner}));
  CHECK_THROWS_AS(
      make_test_function(SmoothBump{}, annulus, {0.1, 2.5, BandSide::Inner}),
      Error);
  CHECK_THROWS_WITH_AS(
      make_test_function(SmoothBump{}, kDisc, {0.1, 0.5, BandSide::Inner}),
      doctest::Contains("config-invalid"), Error);
}

TEST_CASE("torus band stays inside the tube shell") {
  const geom::DomainSpec torus = geom::Torus{3.0, 1.0};
  const TestFunction f = make_test_function(SmoothBump{}, torus, {0.05, 0.9});
  // Supported in the tube shell, vanishing toward the center circle.
  CHECK(f.value_at(torus, {3.5, 0.0, 0.0}) > 0.0);        // delta = 0.5
  CHECK(f.value_at(torus, {3.02, 0.0, 0.0}) == 0.0);      // delta = 0.98
  CHECK(f.value_at(torus, {3.99, 0.0, 0.0}) == 0.0);      // delta = 0.01
}

TEST_CASE("hyperboloid band avoids the axis ridge") {
  const geom::DomainSpec hyp = geom::Hyperboloid{2.0};
  const TestFunction f = make_test_function(SmoothBump{}, hyp, {0.05, 0.4});
  // Everything in the band keeps a positive gap to the ridge: the reach
  // along each normal is w >= 1 > b.
  util::Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const double s = rng.uniform(-1.5, 1.5);
    const double t = rng.uniform(0.0, 2.0 * M_PI);
    const double delta = rng.uniform(0.1, 0.35);
    const Point x = geom::boundary_point(hyp, {0, s, t}) +
                    delta * geom::inward_normal(hyp, {0, s, t});
    const Point p = geom::ridge_point(hyp, x);
    CHECK(norm(p - x) > 0.4);
    CHECK(f.value_at(hyp, x) == doctest::Approx(f.value(delta)).epsilon(1e-8));
  }
}
