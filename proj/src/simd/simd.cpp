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

// Runtime dispatch only; no intrinsics here.

#include <cstdlib>
#include <cstring>

#include "hardylab/simd/kernels.hpp"
#include "hardylab/simd/simd.hpp"

namespace hardylab::simd {

bool avx2_available() {
#ifdef HARDYLAB_HAVE_AVX2
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
#else
  return false;
#endif
}

namespace {

Level detect_level() {
  const char* env = std::getenv("HARDYLAB_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return Level::Scalar;
    if (std::strcmp(env, "avx2") == 0)
      return avx2_available() ? Level::Avx2 : Level::Scalar;
  }
  return avx2_available() ? Level::Avx2 : Level::Scalar;
}

}  // namespace

Level active_level() {
  static const Level level = detect_level();
  return level;
}

const char* level_name(Level level) {
  switch (level) {
    case Level::Scalar: return "scalar";
    case Level::Avx2: return "avx2";
  }
  return "scalar";
}

const Kernels& kernels_for(Level level) {
#ifdef HARDYLAB_HAVE_AVX2
  if (level == Level::Avx2 && avx2_available()) return avx2_kernels();
#else
  (void)level;
#endif
  return scalar_kernels();
}

const Kernels& kernels() { return kernels_for(active_level()); }

}  // namespace hardylab::simd
