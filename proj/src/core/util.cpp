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

#include "hardylab/core/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "hardylab/core/types.hpp"

namespace hardylab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::PointOutsideDomain: return "point-outside-domain";
    case ErrorCode::FailedMinimization: return "failed-minimization";
    case ErrorCode::ParameterOutOfRange: return "parameter-out-of-range";
    case ErrorCode::OnRidge: return "on-ridge";
    case ErrorCode::StencilLeavesDomain: return "stencil-leaves-domain";
    case ErrorCode::StencilCrossesRidge: return "stencil-crosses-ridge";
    case ErrorCode::MarchExceedsTruncation: return "march-exceeds-domain-truncation";
    case ErrorCode::InadmissiblePoint: return "inadmissible-point";
    case ErrorCode::DomainVariantMismatch: return "domain-variant-mismatch";
    case ErrorCode::InadmissibleCombination: return "inadmissible-combination";
    case ErrorCode::BandTouchesRidge: return "band-touches-ridge";
    case ErrorCode::BandEmpty: return "band-empty";
    case ErrorCode::QuadratureUnconverged: return "quadrature-unconverged";
    case ErrorCode::AlphaOutOfRange: return "alpha-out-of-range";
    case ErrorCode::AnnulusBoundary: return "annulus-boundary";
    case ErrorCode::BranchDiscontinuity: return "branch-discontinuity-detected";
    case ErrorCode::SampleOutsideDomain: return "sample-outside-domain";
    case ErrorCode::SearchBudgetExhausted: return "search-budget-exhausted";
    case ErrorCode::ConfigInvalid: return "config-invalid";
  }
  return "unknown-error";
}

const char* band_side_name(BandSide side) {
  switch (side) {
    case BandSide::Auto: return "auto";
    case BandSide::Inner: return "inner";
    case BandSide::Outer: return "outer";
  }
  return "auto";
}

}  // namespace hardylab

namespace hardylab::util {

namespace {

double pairwise_block(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_block(v, half) + pairwise_block(v + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_block(values.data(), values.size());
}

std::size_t thread_cap() {
  if (const char* env = std::getenv("HARDYLAB_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(thread_cap(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  return n == 0 ? 0 : next_u64() % n;
}

}  // namespace hardylab::util
