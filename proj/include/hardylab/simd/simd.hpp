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

#ifndef HARDYLAB_SIMD_SIMD_HPP
#define HARDYLAB_SIMD_SIMD_HPP

namespace hardylab::simd {

enum class Level { Scalar, Avx2 };

/// Highest level compiled in and supported by this CPU, unless overridden by
/// HARDYLAB_SIMD=scalar|avx2|auto (an unsupported request falls back).
Level active_level();

const char* level_name(Level level);

bool avx2_available();

}  // namespace hardylab::simd

#endif  // HARDYLAB_SIMD_SIMD_HPP
