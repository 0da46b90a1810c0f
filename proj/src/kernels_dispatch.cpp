// Copyright 2026 The qvc authors
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
#include <cstring>

#include "qvc/kernels.hpp"

namespace qvc::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct Selection {
  const KernelTable *table;
  const char *name;
};

Selection select() {
  const char *env = std::getenv("QVC_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) {
    return {&scalar_table(), "scalar"};
  }
  const bool have = avx2_compiled() && cpu_has_avx2_fma();
  if (env != nullptr && std::strcmp(env, "avx2") == 0) {
    // Explicit request: honor it only if actually available.
    return have ? Selection{&avx2_table(), "avx2"}
                : Selection{&scalar_table(), "scalar"};
  }
  return have ? Selection{&avx2_table(), "avx2"}
              : Selection{&scalar_table(), "scalar"};
}

const Selection &selection() {
  static const Selection s = select();
  return s;
}

}  // namespace

bool avx2_supported_at_runtime() { return avx2_compiled() && cpu_has_avx2_fma(); }

const KernelTable &active_table() { return *selection().table; }

std::string active_name() { return selection().name; }

}  // namespace qvc::kernels
