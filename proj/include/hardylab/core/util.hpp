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

#ifndef HARDYLAB_CORE_UTIL_HPP
#define HARDYLAB_CORE_UTIL_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hardylab::util {

/// Fixed-tree pairwise summation. The reduction tree depends only on the
/// length, so results are independent of which thread produced which cell.
double pairwise_sum(std::span<const double> values);

/// Runs fn(i) for i in [0, n). Honors HARDYLAB_THREADS (positive integer cap,
/// default 1 thread per hardware core). Callers must write results by index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

std::size_t thread_cap();

/// Deterministic 64-bit generator (splitmix64). Distribution helpers are
/// hand-rolled so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform01();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::uint64_t state_;
};

}  // namespace hardylab::util

#endif  // HARDYLAB_CORE_UTIL_HPP
