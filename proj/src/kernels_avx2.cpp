// Copyright 2026-present the ccsketch project
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

// This translation unit is compiled with -mavx2 -mfma and must only be
// entered through the dispatch layer after an AVX2 capability check.

#include <immintrin.h>

#include "cc/detail/kernel_body.hpp"
#include "cc/kernels.hpp"

namespace cc::kern::detail {

namespace {

struct Avx2Ops {
    using V = __m256d;
    using I = __m256i;
    static constexpr int width = 4;

    static V
    load(const double* p) noexcept {
        return _mm256_loadu_pd(p);
    }
    static void
    store(double* p, V v) noexcept {
        _mm256_storeu_pd(p, v);
    }
    static V
    set1(double c) noexcept {
        return _mm256_set1_pd(c);
    }
    static V
    add(V a, V b) noexcept {
        return _mm256_add_pd(a, b);
    }
    static V
    sub(V a, V b) noexcept {
        return _mm256_sub_pd(a, b);
    }
    static V
    mul(V a, V b) noexcept {
        return _mm256_mul_pd(a, b);
    }
    static V
    div(V a, V b) noexcept {
        return _mm256_div_pd(a, b);
    }
    static V
    fmadd(V a, V b, V c) noexcept {
        return _mm256_fmadd_pd(a, b, c);
    }
    static V
    min(V a, V b) noexcept {
        return _mm256_min_pd(a, b);  // (a < b) ? a : b
    }
    static V
    max(V a, V b) noexcept {
        return _mm256_max_pd(a, b);  // (a > b) ? a : b
    }
    static V
    lt(V a, V b) noexcept {
        return _mm256_cmp_pd(a, b, _CMP_LT_OQ);
    }
    static V
    blend(V mask, V a, V b) noexcept {
        return _mm256_blendv_pd(b, a, mask);
    }
    static V
    andb(V a, V b) noexcept {
        return _mm256_and_pd(a, b);
    }
    static V
    orb(V a, V b) noexcept {
        return _mm256_or_pd(a, b);
    }
    static I
    tobits(V v) noexcept {
        return _mm256_castpd_si256(v);
    }
    static V
    frombits(I b) noexcept {
        return _mm256_castsi256_pd(b);
    }
    static I
    iset1(std::uint64_t c) noexcept {
        return _mm256_set1_epi64x(static_cast<long long>(c));
    }
    static I
    srl(I b, int imm) noexcept {
        return _mm256_srli_epi64(b, imm);
    }
    static I
    sll(I b, int imm) noexcept {
        return _mm256_slli_epi64(b, imm);
    }
    static I
    iadd(I a, I b) noexcept {
        return _mm256_add_epi64(a, b);
    }
    static I
    isub(I a, I b) noexcept {
        return _mm256_sub_epi64(a, b);
    }
    static I
    iand(I a, I b) noexcept {
        return _mm256_and_si256(a, b);
    }
    static I
    ior(I a, I b) noexcept {
        return _mm256_or_si256(a, b);
    }
    static V
    cvt_lo32(I b) noexcept {
        // Gather the low dword of each 64-bit lane, then widen to double.
        const I idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
        const __m128i lo =
            _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(b, idx));
        return _mm256_cvtepi32_pd(lo);
    }
};

using K = Kern<Avx2Ops>;
using S = Kern<ScalarOps>;

}  // namespace

void
vexp_avx2(const double* x, double* y, std::size_t n) noexcept {
    std::size_t t = 0;
    for (; t + 4 <= n; t += 4) {
        Avx2Ops::store(y + t, K::exp_v(Avx2Ops::load(x + t)));
    }
    for (; t < n; ++t) {
        y[t] = S::exp_v(x[t]);
    }
}

void
vlog_avx2(const double* x, double* y, std::size_t n) noexcept {
    std::size_t t = 0;
    for (; t + 4 <= n; t += 4) {
        Avx2Ops::store(y + t, K::log_v(Avx2Ops::load(x + t)));
    }
    for (; t < n; ++t) {
        y[t] = S::log_v(x[t]);
    }
}

void
vlogz_avx2(std::uint64_t seed, std::uint64_t i, std::uint64_t j0, double alpha,
           double* logz, std::size_t n) noexcept {
    const double delta = 1.0 - alpha;
    alignas(32) double ubuf[8];
    std::size_t t = 0;
    for (; t + 4 <= n; t += 4) {
        fill_uniform_pairs(seed, i, j0 + t, 4, ubuf);
        const __m256d u1 =
            _mm256_setr_pd(ubuf[0], ubuf[2], ubuf[4], ubuf[6]);
        const __m256d u2 =
            _mm256_setr_pd(ubuf[1], ubuf[3], ubuf[5], ubuf[7]);
        Avx2Ops::store(logz + t, K::logz_v(u1, u2, alpha, delta));
    }
    for (; t < n; ++t) {
        const std::uint64_t key = rng::derive_key(seed, i, j0 + t);
        const double u1 = rng::u53_open(rng::key_word(key, 0));
        const double u2 = rng::u53_open(rng::key_word(key, 1));
        logz[t] = S::logz_v(u1, u2, alpha, delta);
    }
}

void
vsym_avx2(std::uint64_t seed, std::uint64_t i, std::uint64_t j0, double alpha,
          double* s, std::size_t n) noexcept {
    const double delta = 1.0 - alpha;
    alignas(32) double ubuf[8];
    std::size_t t = 0;
    for (; t + 4 <= n; t += 4) {
        fill_uniform_pairs(seed, i, j0 + t, 4, ubuf);
        const __m256d u1 =
            _mm256_setr_pd(ubuf[0], ubuf[2], ubuf[4], ubuf[6]);
        const __m256d u2 =
            _mm256_setr_pd(ubuf[1], ubuf[3], ubuf[5], ubuf[7]);
        Avx2Ops::store(s + t, K::sym_v(u1, u2, alpha, delta));
    }
    for (; t < n; ++t) {
        const std::uint64_t key = rng::derive_key(seed, i, j0 + t);
        const double u1 = rng::u53_open(rng::key_word(key, 0));
        const double u2 = rng::u53_open(rng::key_word(key, 1));
        s[t] = S::sym_v(u1, u2, alpha, delta);
    }
}

void
vaxpy_avx2(double amount, const double* z, double* x, std::size_t n) noexcept {
    const __m256d a = _mm256_set1_pd(amount);
    std::size_t t = 0;
    for (; t + 4 <= n; t += 4) {
        const __m256d acc = _mm256_fmadd_pd(a, _mm256_loadu_pd(z + t),
                                            _mm256_loadu_pd(x + t));
        _mm256_storeu_pd(x + t, acc);
    }
    for (; t < n; ++t) {
        x[t] = std::fma(amount, z[t], x[t]);
    }
}

}  // namespace cc::kern::detail
