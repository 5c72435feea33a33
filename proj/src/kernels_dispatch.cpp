// Copyright 2026 The qfres Authors
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

#include "kernels_internal.hpp"

#include <cstdlib>
#include <string_view>

namespace qfres::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(QFRES_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const KernelTable &select() {
    const char *forced = std::getenv("QFRES_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
        return scalar();
    }
    if (const KernelTable *table = avx2()) {
        return *table;
    }
    // TODO: add a NEON table for aarch64 builds.
    return scalar();
}

} // namespace

const KernelTable *avx2() {
#if defined(QFRES_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active() {
    static const KernelTable &table = select();
    return table;
}

} // namespace qfres::kernels
