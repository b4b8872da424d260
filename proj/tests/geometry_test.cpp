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

#include "hardylab/geometry/ops.hpp"

using namespace hardylab;
using geom::DomainSpec;

namespace {

// Brute-force distance oracle: dense sampling of every boundary chart.
double dense_boundary_distance(const DomainSpec& domain, const Point& x,
                               int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (int c = 0; c < geom::boundary_chart_count(domain); ++c) {
    for (int i = 0; i < samples; ++i) {
      const double u = 2.0 * M_PI * i / samples;
      const Point y = geom::boundary_point(domain, {c, u, 0.0});
      best = std::min(best, norm(y - x));
    }
  }
  return best;
}

const DomainSpec kDisc = geom::Disc{1.0};
const DomainSpec kAnnulus = geom::Annulus{1.0, 3.0};
const DomainSpec kEllipse = geom::Ellipse{2.0, 1.0};
const DomainSpec kExterior = geom::ExteriorDisc{1.0};
const DomainSpec kCylinder = geom::Cylinder{1.0, 1.0};
const DomainSpec kTorus = geom::Torus{3.0, 1.0};
const DomainSpec kHyperboloid = geom::Hyperboloid{2.0};

}  // namespace

TEST_CASE("closed-form distances") {
  CHECK(geom::distance(kDisc, {0.0, 0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(geom::distance(kDisc, {0.5, 0.0, 0.0}) == doctest::Approx(0.5));
  CHECK(geom::distance(kTorus, {3.5, 0.0, 0.0}) == doctest::Approx(0.5));
  CHECK(geom::distance(kAnnulus, {0.0, 2.5, 0.0}) == doctest::Approx(0.5));
  CHECK(geom::distance(kCylinder, {0.5, 0.0, 7.0}) == doctest::Approx(0.5));
  CHECK(geom::distance(kExterior, {2.0, 0.0, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("distance rejects points outside the domain") {
  CHECK_THROWS_WITH_AS(geom::distance(kDisc, {2.0, 0.0, 0.0}),
                       doctest::Contains("point-outside-domain"), Error);
  CHECK_THROWS_AS(geom::distance(kExterior, {0.5, 0.0, 0.0}), Error);
  CHECK_THROWS_AS(geom::near_points(kTorus, {0.0, 0.0, 0.0}), Error);
}

TEST_CASE("ellipse distance agrees with the dense sampling oracle") {
  // Center value is the semi-minor axis.
  CHECK(geom::distance(kEllipse, {0.0, 0.0, 0.0}) == doctest::Approx(1.0));
  const double oracle =
      dense_boundary_distance(kEllipse, {0.0, 0.0, 0.0}, 1000000);
  CHECK(geom::distance(kEllipse, {0.0, 0.0, 0.0}) ==
        doctest::Approx(oracle).epsilon(1e-9));

  util::Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const Point x = geom::sample_off_ridge(kEllipse, rng);
    const double d = geom::distance(kEllipse, x);
    const double ref = dense_boundary_distance(kEllipse, x, 20000);
    // The coarse oracle overestimates by O(step^2 / delta).
    CHECK(d <= ref + 1e-12);
    CHECK(d == doctest::Approx(ref).epsilon(1e-4));
  }
}

TEST_CASE("hyperboloid distance agrees with the dense sampling oracle") {
  util::Rng rng(22);
  for (int i = 0; i < 10; ++i) {
    const Point x = geom::sample_off_ridge(kHyperboloid, rng);
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 800; ++a) {
      const double s = -4.0 + 8.0 * a / 800.0;
      for (int b = 0; b < 800; ++b) {
        const double t = 2.0 * M_PI * b / 800.0;
        const Point y = geom::boundary_point(kHyperboloid, {0, s, t});
        best = std::min(best, norm(y - x));
      }
    }
    CHECK(geom::distance(kHyperboloid, x) == doctest::Approx(best).epsilon(1e-4));
  }
}

TEST_CASE("near points: disc radial geometry") {
  const auto np = geom::near_points(kDisc, {0.5, 0.0, 0.0}, 1e-9);
  REQUIRE(np.multiplicity == 1);
  CHECK(np.delta == doctest::Approx(0.5));
  CHECK(np.near_points[0].y[0] == doctest::Approx(1.0));
  CHECK(np.near_points[0].y[1] == doctest::Approx(0.0));
  REQUIRE(np.grad_delta.has_value());
  CHECK((*np.grad_delta)[0] == doctest::Approx(-1.0));
  CHECK((*np.grad_delta)[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(norm(*np.grad_delta) == doctest::Approx(1.0));
}

TEST_CASE("near points: annulus midradius is the skeleton") {
  const auto np = geom::near_points(kAnnulus, {2.0, 0.0, 0.0}, 1e-9);
  CHECK(np.multiplicity == 2);
  CHECK(np.delta == doctest::Approx(1.0));
  CHECK_FALSE(np.grad_delta.has_value());
}

TEST_CASE("near points: disc center is a continuum") {
  const auto np = geom::near_points(kDisc, {0.0, 0.0, 0.0});
  CHECK(np.multiplicity == geom::NearPointResult::kContinuum);
  CHECK(np.delta == doctest::Approx(1.0));
}

TEST_CASE("near points: every reported point realizes delta") {
  util::Rng rng(31);
  for (const DomainSpec* d : {&kDisc, &kAnnulus, &kEllipse, &kExterior,
                              &kCylinder, &kTorus, &kHyperboloid}) {
    for (int i = 0; i < 25; ++i) {
      const Point x = geom::sample_off_ridge(*d, rng);
      const auto np = geom::near_points(*d, x);
      REQUIRE(np.multiplicity >= 1);
      for (const auto& entry : np.near_points) {
        CHECK(norm(entry.y - x) ==
              doctest::Approx(np.delta).epsilon(1e-9));
        const Point on_boundary = geom::boundary_point(*d, entry.param);
        CHECK(norm(on_boundary - entry.y) <= 1e-9 * (1.0 + np.delta));
      }
    }
  }
}

TEST_CASE("hyperboloid near point sits between ridge point and origin") {
  // The near point is equidistant from the ridge point of x and the origin.
  const auto check_point = [&](const Point& x) {
    const auto np = geom::near_points(kHyperboloid, x);
    REQUIRE(np.multiplicity == 1);
    const Point y = np.near_points[0].y;
    const Point p = geom::ridge_point(kHyperboloid, x);
    CHECK(std::sqrt(p[0] * p[0] + p[1] * p[1]) <= 1e-5);  // ridge is the axis
    CHECK(norm(y - p) == doctest::Approx(norm(y)).epsilon(1e-6));
  };
  check_point({0.2, 0.0, 0.0});
  check_point({0.3, 0.0, 0.8});
  check_point({0.0, 0.4, -1.1});
}

TEST_CASE("principal curvatures of the catalog") {
  const auto torus = geom::principal_curvatures(kTorus, {0, 0.0, 0.0});
  REQUIRE(torus.size() == 2);
  CHECK(torus[0] == doctest::Approx(-1.0));
  CHECK(torus[1] == doctest::Approx(-0.25));

  const auto hyp = geom::principal_curvatures(kHyperboloid, {0, 0.0, 0.0});
  REQUIRE(hyp.size() == 2);
  CHECK(hyp[0] == doctest::Approx(-1.0));
  CHECK(hyp[1] == doctest::Approx(1.0));

  const auto disc2 = geom::principal_curvatures(geom::Disc{2.0}, {0, 1.3, 0.0});
  REQUIRE(disc2.size() == 1);
  CHECK(disc2[0] == doctest::Approx(-0.5));

  CHECK(geom::principal_curvatures(kAnnulus, {0, 0.7, 0.0})[0] ==
        doctest::Approx(1.0));
  CHECK(geom::principal_curvatures(kAnnulus, {1, 0.7, 0.0})[0] ==
        doctest::Approx(-1.0 / 3.0));
  CHECK(geom::principal_curvatures(kExterior, {0, 0.1, 0.0})[0] ==
        doctest::Approx(1.0));

  // Ellipse vertex on the major axis: kappa = -a/b^2.
  CHECK(geom::principal_curvatures(kEllipse, {0, 0.0, 0.0})[0] ==
        doctest::Approx(-2.0));

  const auto cyl = geom::principal_curvatures(kCylinder, {0, 0.3, 0.2});
  REQUIRE(cyl.size() == 2);
  CHECK(cyl[0] == doctest::Approx(-1.0));
  CHECK(cyl[1] == doctest::Approx(0.0));

  CHECK_THROWS_AS(geom::principal_curvatures(kDisc, {3, 0.0, 0.0}), Error);
}

TEST_CASE("level surface curvatures") {
  const auto disc = geom::level_surface_curvatures(kDisc, {0.5, 0.0, 0.0});
  REQUIRE(disc.size() == 1);
  CHECK(disc[0] == doctest::Approx(-2.0));

  const auto ext = geom::level_surface_curvatures(kExterior, {2.0, 0.0, 0.0});
  REQUIRE(ext.size() == 1);
  CHECK(ext[0] == doctest::Approx(0.5));

  // Torus outer equator at delta = 0.5.
  const auto tor = geom::level_surface_curvatures(kTorus, {3.5, 0.0, 0.0});
  REQUIRE(tor.size() == 2);
  CHECK(tor[0] == doctest::Approx(-2.0));
  CHECK(tor[1] == doctest::Approx(-2.0 / 7.0));
}

TEST_CASE("ridge verdicts") {
  CHECK(geom::is_near_ridge(kDisc, {0.0, 0.0, 0.0}).on_ridge);
  CHECK(geom::is_near_ridge(kTorus, {3.0, 0.0, 0.0}).on_ridge);
  const auto clear = geom::is_near_ridge(kDisc, {0.5, 0.0, 0.0}, 1e-6);
  CHECK_FALSE(clear.on_ridge);
  REQUIRE(clear.distance_to_ridge.has_value());
  CHECK(*clear.distance_to_ridge == doctest::Approx(0.5));
  CHECK(geom::is_near_ridge(kAnnulus, {2.0, 0.0, 0.0}).on_ridge);
  CHECK_FALSE(geom::is_near_ridge(kExterior, {5.0, 0.0, 0.0}).on_ridge);
}

TEST_CASE("ridge points of the catalog") {
  const Point pd = geom::ridge_point(kDisc, {0.5, 0.0, 0.0});
  CHECK(norm(pd) <= 1e-9);

  const Point pa = geom::ridge_point(kAnnulus, {2.5, 0.0, 0.0});
  CHECK(pa[0] == doctest::Approx(2.0).epsilon(1e-9));

  const Point ph = geom::ridge_point(kHyperboloid, {0.5, 0.0, 0.0});
  CHECK(std::sqrt(ph[0] * ph[0] + ph[1] * ph[1]) <= 1e-6);

  const Point pt = geom::ridge_point(kTorus, {3.5, 0.0, 0.0});
  CHECK(std::sqrt(pt[0] * pt[0] + pt[1] * pt[1]) == doctest::Approx(3.0));
  CHECK(pt[2] == doctest::Approx(0.0).epsilon(1e-9));

  CHECK_THROWS_WITH_AS(geom::ridge_point(kExterior, {2.0, 0.0, 0.0}),
                       doctest::Contains("march-exceeds"), Error);
  CHECK_THROWS_AS(geom::ridge_point(kDisc, {0.0, 0.0, 0.0}), Error);
}

TEST_CASE("annulus ridge consistency") {
  util::Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    const Point x = geom::sample_off_ridge(kAnnulus, rng);
    const Point p = geom::ridge_point(kAnnulus, x);
    CHECK(std::sqrt(p[0] * p[0] + p[1] * p[1]) ==
          doctest::Approx(2.0).epsilon(1e-8));
    // Near the ridge point the verdict flips on, away it stays clear.
    const double eps = 1e-3;
    const Point unit = (1.0 / std::sqrt(p[0] * p[0] + p[1] * p[1])) * p;
    const Point close_by = p + (0.3 * eps) * unit;
    const Point far_off = p + (20.0 * eps) * unit;
    CHECK(geom::is_near_ridge(kAnnulus, close_by, eps).on_ridge);
    CHECK_FALSE(geom::is_near_ridge(kAnnulus, far_off, eps).on_ridge);
  }
}

TEST_CASE("eikonal and gradient-form properties") {
  util::Rng rng(77);
  for (const DomainSpec* d : {&kDisc, &kAnnulus, &kEllipse, &kExterior,
                              &kCylinder, &kTorus, &kHyperboloid}) {
    const double h = 1e-4 * geom::domain_scale(*d);
    const int dim = geom::dimension(*d);
    for (int i = 0; i < 100; ++i) {
      const Point x = geom::sample_off_ridge(*d, rng);
      Point g{0.0, 0.0, 0.0};
      for (int j = 0; j < dim; ++j) {
        Point xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        g[j] = (geom::distance(*d, xp) - geom::distance(*d, xm)) / (2.0 * h);
      }
      CHECK(std::fabs(norm(g) - 1.0) <= 10.0 * h);
      const auto np = geom::near_points(*d, x);
      REQUIRE(np.grad_delta.has_value());
      CHECK(norm(g - *np.grad_delta) <= 10.0 * h);
    }
  }
}

TEST_CASE("conformal annulus backed by the identity matches the annulus") {
  const DomainSpec conf =
      geom::ConformalAnnulus{conformal::IdentityAnnulus{1.0, 3.0}};
  util::Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const Point x = geom::sample_off_ridge(kAnnulus, rng);
    CHECK(geom::distance(conf, x) ==
          doctest::Approx(geom::distance(kAnnulus, x)).epsilon(1e-9));
  }
  // Chart curvatures from the parametric fallback match the closed forms.
  CHECK(geom::principal_curvatures(conf, {0, 0.4, 0.0})[0] ==
        doctest::Approx(1.0).epsilon(1e-7));
  CHECK(geom::principal_curvatures(conf, {1, 0.4, 0.0})[0] ==
        doctest::Approx(-1.0 / 3.0).epsilon(1e-7));
}

TEST_CASE("sqrt-quadratic boundary loops sit on their level sets") {
  const conformal::MapSpec map = conformal::SqrtQuadratic{0.5, 2.0};
  const DomainSpec conf = geom::ConformalAnnulus{map};
  REQUIRE(geom::boundary_chart_count(conf) == 3);
  for (int chart = 0; chart < 3; ++chart) {
    const double expected = chart == 2 ? 4.0 : 0.25;  // |z^2-1| = c^2
    for (double u : {0.1, 1.0, 2.5, 4.0}) {
      const Point y = geom::boundary_point(conf, {chart, u, 0.0});
      const std::complex<double> z(y[0], y[1]);
      CHECK(std::abs(z * z - 1.0) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}
