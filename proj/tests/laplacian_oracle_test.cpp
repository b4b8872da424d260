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

// The curvature route and the finite-difference route to the distance
// Laplacian are independent; each checks the other.

#include <cmath>

#include <doctest.h>

#include "hardylab/geometry/ops.hpp"

using namespace hardylab;
using geom::DomainSpec;

namespace {

const DomainSpec kDisc = geom::Disc{1.0};
const DomainSpec kAnnulus = geom::Annulus{1.0, 3.0};
const DomainSpec kEllipse = geom::Ellipse{2.0, 1.0};
const DomainSpec kExterior = geom::ExteriorDisc{1.0};
const DomainSpec kCylinder = geom::Cylinder{1.0, 1.0};
const DomainSpec kTorus = geom::Torus{3.0, 1.0};
const DomainSpec kHyperboloid = geom::Hyperboloid{2.0};

Point hyperboloid_offset_point(double s, double t, double delta) {
  const DomainSpec& d = kHyperboloid;
  const Point g = geom::boundary_point(d, {0, s, t});
  const Point n = geom::inward_normal(d, {0, s, t});
  return g + delta * n;
}

}  // namespace

TEST_CASE("disc: Laplacian of distance is -1/|x|") {
  const Point x{0.5, 0.0, 0.0};
  CHECK(geom::laplacian_distance(kDisc, x) == doctest::Approx(-2.0));
  CHECK(geom::laplacian_distance_fd(kDisc, x, 1e-3) ==
        doctest::Approx(-2.0).epsilon(1e-5));
}

TEST_CASE("torus outer equator at delta 0.5 gives -16/7") {
  const Point x{3.5, 0.0, 0.0};
  const double expected = -16.0 / 7.0;
  CHECK(geom::laplacian_distance(kTorus, x) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(geom::laplacian_distance_fd(kTorus, x, 1e-4) ==
        doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("hyperboloid near point at the waist, delta 0.25, gives -8/15") {
  const Point x = hyperboloid_offset_point(0.0, 0.3, 0.25);
  const double expected = -8.0 / 15.0;
  CHECK(geom::laplacian_distance(kHyperboloid, x) ==
        doctest::Approx(expected).epsilon(1e-9));
  CHECK(geom::laplacian_distance_fd(kHyperboloid, x, 1e-4) ==
        doctest::Approx(expected).epsilon(1e-5));
}

TEST_CASE("cylinder at delta 0.5: -1/(1-delta) = -2") {
  const Point x{0.5, 0.0, 0.3};
  CHECK(geom::laplacian_distance(kCylinder, x) == doctest::Approx(-2.0));
  CHECK(geom::laplacian_distance_fd(kCylinder, x, 1e-3) ==
        doctest::Approx(-2.0).epsilon(1e-5));
}

TEST_CASE("annulus outer side at |x| = 2.5: -0.4") {
  const Point x{0.0, 2.5, 0.0};
  CHECK(geom::laplacian_distance(kAnnulus, x) == doctest::Approx(-0.4));
  CHECK(geom::laplacian_distance_fd(kAnnulus, x, 1e-3) ==
        doctest::Approx(-0.4).epsilon(1e-5));
}

TEST_CASE("laplacian_distance refuses the ridge") {
  CHECK_THROWS_WITH_AS(geom::laplacian_distance(kDisc, {0.0, 0.0, 0.0}),
                       doctest::Contains("on-ridge"), Error);
  CHECK_THROWS_AS(geom::laplacian_distance(kAnnulus, {2.0, 0.0, 0.0}), Error);
}

TEST_CASE("fd stencil preconditions") {
  CHECK_THROWS_WITH_AS(
      geom::laplacian_distance_fd(kDisc, {0.999, 0.0, 0.0}, 1e-3),
      doctest::Contains("stencil-leaves-domain"), Error);
  CHECK_THROWS_WITH_AS(
      geom::laplacian_distance_fd(kDisc, {1e-4, 0.0, 0.0}, 1e-3),
      doctest::Contains("stencil-crosses-ridge"), Error);
}

TEST_CASE("oracle equivalence converges at second order") {
  util::Rng rng(2026);
  for (const DomainSpec* d : {&kDisc, &kAnnulus, &kEllipse, &kExterior,
                              &kCylinder, &kTorus, &kHyperboloid}) {
    const double scale = geom::domain_scale(*d);
    const double h = 1e-3 * scale;
    double err_h = 0.0, err_h2 = 0.0, err_small = 0.0;
    const int points = 60;
    for (int i = 0; i < points; ++i) {
      const Point x = geom::sample_off_ridge(*d, rng);
      const double lap = geom::laplacian_distance(*d, x);
      err_h += std::fabs(lap - geom::laplacian_distance_fd(*d, x, h));
      err_h2 += std::fabs(lap - geom::laplacian_distance_fd(*d, x, h / 2.0));
      err_small += std::fabs(
          lap - geom::laplacian_distance_fd(*d, x, 1e-4 * scale));
    }
    err_h /= points;
    err_h2 /= points;
    err_small /= points;
    INFO("domain ", geom::domain_name(*d), " err_h=", err_h, " err_h2=",
         err_h2);
    CHECK(err_h / err_h2 >= 3.0);  // O(h^2): ratio ~ 4
    CHECK(err_small <= 1e-4);
  }
}

TEST_CASE("interior sign facts") {
  util::Rng rng(11);
  for (const DomainSpec* d : {&kDisc, &kEllipse, &kCylinder}) {
    for (int i = 0; i < 100; ++i) {
      const Point x = geom::sample_off_ridge(*d, rng);
      CHECK(geom::laplacian_distance(*d, x) <= 1e-12);
    }
  }
  for (int i = 0; i < 100; ++i) {
    const Point x = geom::sample_off_ridge(kExterior, rng);
    CHECK(geom::laplacian_distance(kExterior, x) >= -1e-12);
    // Exterior of a convex body: 1 + delta*kappa >= 1.
    const auto data = geom::curvature_at(kExterior, x);
    const double delta = geom::distance(kExterior, x);
    for (double k : data.kappas) CHECK(1.0 + delta * k >= 1.0);
  }
  for (int i = 0; i < 100; ++i) {
    const Point x = geom::sample_off_ridge(kTorus, rng);
    CHECK(geom::laplacian_distance(kTorus, x) < 0.0);
  }
}

TEST_CASE("hyperboloid distance Laplacian changes sign") {
  // Close to the boundary away from the waist the positive azimuthal
  // curvature dominates; deep inside at the waist the sign flips.
  const Point positive_side = hyperboloid_offset_point(1.2, 0.0, 0.05);
  const Point negative_side = hyperboloid_offset_point(0.0, 0.0, 0.25);
  CHECK(geom::laplacian_distance(kHyperboloid, positive_side) > 0.0);
  CHECK(geom::laplacian_distance(kHyperboloid, negative_side) < 0.0);
}

TEST_CASE("level denominators stay positive off the ridge") {
  util::Rng rng(17);
  for (const DomainSpec* d : {&kDisc, &kAnnulus, &kEllipse, &kCylinder,
                              &kTorus, &kHyperboloid}) {
    for (int i = 0; i < 100; ++i) {
      const Point x = geom::sample_off_ridge(*d, rng);
      const double delta = geom::distance(*d, x);
      for (double k : geom::curvature_at(*d, x).kappas)
        CHECK(1.0 + delta * k > 0.0);
    }
  }
}
