// Copyright 2026 The rankgame Authors. All rights reserved.
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

#ifndef RANKGAME_OMP_H_
#define RANKGAME_OMP_H_

// Include this instead of <omp.h> so the kernels still build without OpenMP.
#if defined(_OPENMP)
#include <omp.h>
namespace rankgame {
inline constexpr bool kUseOmp = true;
}  // namespace rankgame
#else
namespace rankgame {
inline constexpr bool kUseOmp = false;
}  // namespace rankgame
inline int omp_get_thread_num() { return 0; }
inline int omp_get_max_threads() { return 1; }
inline void omp_set_num_threads(int) {}
#endif

#endif  // RANKGAME_OMP_H_
