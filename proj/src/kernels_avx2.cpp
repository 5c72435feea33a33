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

// AVX2 variants. One __m256d holds two consecutive complex amplitudes
// [re_i, im_i, re_{i+1}, im_{i+1}].

#include "kernels_internal.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qfres::kernels {
namespace {

inline __m256d load(const Amplitude *v, std::size_t i) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(v + i));
}

inline void store(Amplitude *v, std::size_t i, __m256d x) {
    _mm256_storeu_pd(reinterpret_cast<double *>(v + i), x);
}

// x * w for packed complex pairs, w given as [c0,c0,c1,c1] and [s0,s0,s1,s1].
inline __m256d cmul(__m256d x, __m256d wr, __m256d wi) {
    const __m256d t1 = _mm256_mul_pd(x, wr);
    const __m256d t2 = _mm256_mul_pd(_mm256_permute_pd(x, 0b0101), wi);
    return _mm256_addsub_pd(t1, t2);
}

inline void swap_pairs(Amplitude *v, std::size_t i, std::size_t j) {
    const __m256d a = load(v, i);
    const __m256d b = load(v, j);
    store(v, i, b);
    store(v, j, a);
}

void hadamard(std::span<Amplitude> span, int q) {
    Amplitude *v = span.data();
    const std::size_t n = span.size();
    const __m256d s = _mm256_set1_pd(1.0 / std::numbers::sqrt2);
    if (q == 0) {
        for (std::size_t i = 0; i < n; i += 2) {
            const __m256d x = load(v, i);
            const __m256d sw = _mm256_permute2f128_pd(x, x, 0x01);
            const __m256d sum = _mm256_add_pd(x, sw);
            const __m256d diff = _mm256_sub_pd(sw, x);
            store(v, i, _mm256_mul_pd(_mm256_blend_pd(sum, diff, 0b1100), s));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; j += 2) {
            const __m256d a = load(v, base + j);
            const __m256d b = load(v, base + stride + j);
            store(v, base + j, _mm256_mul_pd(_mm256_add_pd(a, b), s));
            store(v, base + stride + j, _mm256_mul_pd(_mm256_sub_pd(a, b), s));
        }
    }
}

void controlled_phase(std::span<Amplitude> span, int a, int b,
                      Amplitude phase) {
    Amplitude *v = span.data();
    const std::size_t n = span.size();
    const auto [lo, hi] = std::minmax(a, b);
    const std::size_t lo_len = std::size_t{1} << lo;
    const std::size_t hi_len = std::size_t{1} << hi;
    if (lo == 0) {
        const __m256d wr = _mm256_set_pd(phase.real(), phase.real(), 1.0, 1.0);
        const __m256d wi = _mm256_set_pd(phase.imag(), phase.imag(), 0.0, 0.0);
        for (std::size_t base = hi_len; base < n; base += 2 * hi_len) {
            for (std::size_t j = 0; j < hi_len; j += 2) {
                store(v, base + j, cmul(load(v, base + j), wr, wi));
            }
        }
        return;
    }
    const __m256d wr = _mm256_set1_pd(phase.real());
    const __m256d wi = _mm256_set1_pd(phase.imag());
    for (std::size_t base = hi_len; base < n; base += 2 * hi_len) {
        for (std::size_t sub = lo_len; sub < hi_len; sub += 2 * lo_len) {
            for (std::size_t j = 0; j < lo_len; j += 2) {
                const std::size_t i = base + sub + j;
                store(v, i, cmul(load(v, i), wr, wi));
            }
        }
    }
}

void swap(std::span<Amplitude> span, int a, int b) {
    Amplitude *v = span.data();
    const std::size_t n = span.size();
    const auto [lo, hi] = std::minmax(a, b);
    const std::size_t lo_len = std::size_t{1} << lo;
    const std::size_t hi_len = std::size_t{1} << hi;
    if (lo == 0) {
        for (std::size_t base = 0; base < n; base += 2 * hi_len) {
            for (std::size_t j = 0; j < hi_len; j += 2) {
                const __m256d x = load(v, base + j);
                const __m256d y = load(v, base + hi_len + j);
                store(v, base + j, _mm256_permute2f128_pd(x, y, 0x20));
                store(v, base + hi_len + j, _mm256_permute2f128_pd(x, y, 0x31));
            }
        }
        return;
    }
    for (std::size_t base = 0; base < n; base += 2 * hi_len) {
        for (std::size_t sub = 0; sub < hi_len; sub += 2 * lo_len) {
            for (std::size_t j = 0; j < lo_len; j += 2) {
                swap_pairs(v, base + sub + lo_len + j, base + hi_len + sub + j);
            }
        }
    }
}

void cnot(std::span<Amplitude> span, int control, int target) {
    Amplitude *v = span.data();
    const std::size_t n = span.size();
    const std::size_t c_len = std::size_t{1} << control;
    const std::size_t t_len = std::size_t{1} << target;
    if (target > control) {
        if (control == 0) {
            for (std::size_t base = 0; base < n; base += 2 * t_len) {
                for (std::size_t j = 0; j < t_len; j += 2) {
                    const __m256d x = load(v, base + j);
                    const __m256d y = load(v, base + t_len + j);
                    store(v, base + j, _mm256_blend_pd(x, y, 0b1100));
                    store(v, base + t_len + j, _mm256_blend_pd(y, x, 0b1100));
                }
            }
            return;
        }
        for (std::size_t base = 0; base < n; base += 2 * t_len) {
            for (std::size_t sub = c_len; sub < t_len; sub += 2 * c_len) {
                for (std::size_t j = 0; j < c_len; j += 2) {
                    const std::size_t i = base + sub + j;
                    swap_pairs(v, i, i + t_len);
                }
            }
        }
        return;
    }
    for (std::size_t base = c_len; base < n; base += 2 * c_len) {
        if (target == 0) {
            for (std::size_t j = 0; j < c_len; j += 2) {
                const __m256d x = load(v, base + j);
                store(v, base + j, _mm256_permute2f128_pd(x, x, 0x01));
            }
            continue;
        }
        for (std::size_t sub = 0; sub < c_len; sub += 2 * t_len) {
            for (std::size_t j = 0; j < t_len; j += 2) {
                const std::size_t i = base + sub + j;
                swap_pairs(v, i, i + t_len);
            }
        }
    }
}

void accumulate_norm(std::span<const Amplitude> span, std::span<double> out) {
    const Amplitude *v = span.data();
    const std::size_t n = span.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x0 = load(v, i);
        const __m256d x1 = load(v, i + 2);
        // hadd gives [|v0|^2, |v2|^2, |v1|^2, |v3|^2]
        const __m256d h =
            _mm256_hadd_pd(_mm256_mul_pd(x0, x0), _mm256_mul_pd(x1, x1));
        const __m256d norms = _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0));
        _mm256_storeu_pd(out.data() + i,
                         _mm256_add_pd(_mm256_loadu_pd(out.data() + i), norms));
    }
    for (; i < n; ++i) {
        out[i] += std::norm(v[i]);
    }
}

constexpr KernelTable kAvx2{"avx2",  &hadamard, &controlled_phase,
                            &swap,   &cnot,     &accumulate_norm};

} // namespace

const KernelTable &avx2_table() { return kAvx2; }

} // namespace qfres::kernels
