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

#include <cstdlib>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "hardylab/core/util.hpp"

using namespace hardylab;

TEST_CASE("pairwise sum matches sequential accumulation") {
  util::Rng rng(42);
  std::vector<double> v(1537);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  const double seq = std::accumulate(v.begin(), v.end(), 0.0);
  const double pw = util::pairwise_sum(v);
  CHECK(pw == doctest::Approx(seq).epsilon(1e-12));
}

TEST_CASE("pairwise sum is independent of thread count") {
  util::Rng rng(7);
  std::vector<double> cells(4096);
  const auto fill = [&](std::size_t threads) {
    setenv("HARDYLAB_THREADS", std::to_string(threads).c_str(), 1);
    std::vector<double> out(cells.size());
    util::parallel_for(out.size(),
                       [&](std::size_t i) { out[i] = cells[i] * cells[i]; });
    unsetenv("HARDYLAB_THREADS");
    return util::pairwise_sum(out);
  };
  for (double& c : cells) c = rng.uniform(0.0, 1.0);
  const double one = fill(1);
  const double four = fill(4);
  CHECK(one == four);  // bitwise: same tree, same cells
}

TEST_CASE("rng streams are reproducible") {
  util::Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  util::Rng c(123);
  const double u = c.uniform01();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

TEST_CASE("parallel_for covers every index exactly once") {
  setenv("HARDYLAB_THREADS", "3", 1);
  std::vector<int> hits(1000, 0);
  util::parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  unsetenv("HARDYLAB_THREADS");
  for (int h : hits) CHECK(h == 1);
}
