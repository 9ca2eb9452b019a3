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

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

#include "cc/detail/kernel_coeffs.hpp"
#include "cc/rng.hpp"

namespace cc::kern::detail {

// The throughput-tier math is written once against a lane-ops policy and
// instantiated for a scalar policy and for each SIMD policy. Every backend
// therefore executes the identical chain of correctly-rounded operations
// (+, -, *, /, fma, blend-on-compare, bit twiddling), which makes results
// bitwise-equal across backends by construction. The ops mirror AVX
// semantics; compare masks are always all-ones or all-zero per lane.
//
// Domain contracts (callers guarantee these; they hold by construction in
// the sampling pipelines below):
//   exp_v:    any finite x; |x| > 708 is clamped to the boundary value.
//   log_v:    positive normal doubles.
//   log1p_v:  z > -1 with 1+z a positive normal double.
//   sin_half_v: |t| <= pi/2 (+1 ulp slack).
//   sin_pi_v: 0 <= x <= pi.

struct ScalarOps {
    using V = double;
    using I = std::uint64_t;
    static constexpr int width = 1;

    static V
    load(const double* p) noexcept {
        return *p;
    }
    static void
    store(double* p, V v) noexcept {
        *p = v;
    }
    static V
    set1(double c) noexcept {
        return c;
    }
    static V
    add(V a, V b) noexcept {
        return a + b;
    }
    static V
    sub(V a, V b) noexcept {
        return a - b;
    }
    static V
    mul(V a, V b) noexcept {
        return a * b;
    }
    static V
    div(V a, V b) noexcept {
        return a / b;
    }
    static V
    fmadd(V a, V b, V c) noexcept {
        return std::fma(a, b, c);
    }
    static V
    min(V a, V b) noexcept {
        return a < b ? a : b;
    }
    static V
    max(V a, V b) noexcept {
        return a > b ? a : b;
    }
    static V
    lt(V a, V b) noexcept {  // all-ones mask when a < b
        return std::bit_cast<V>(a < b ? ~0ULL : 0ULL);
    }
    static V
    blend(V mask, V a, V b) noexcept {  // mask ? a : b
        const I m = std::bit_cast<I>(mask);
        return std::bit_cast<V>((m & std::bit_cast<I>(a)) |
                                (~m & std::bit_cast<I>(b)));
    }
    static V
    andb(V a, V b) noexcept {
        return std::bit_cast<V>(std::bit_cast<I>(a) & std::bit_cast<I>(b));
    }
    static V
    orb(V a, V b) noexcept {
        return std::bit_cast<V>(std::bit_cast<I>(a) | std::bit_cast<I>(b));
    }
    static I
    tobits(V v) noexcept {
        return std::bit_cast<I>(v);
    }
    static V
    frombits(I b) noexcept {
        return std::bit_cast<V>(b);
    }
    static I
    iset1(std::uint64_t c) noexcept {
        return c;
    }
    static I
    srl(I b, int imm) noexcept {
        return b >> imm;
    }
    static I
    sll(I b, int imm) noexcept {
        return b << imm;
    }
    static I
    iadd(I a, I b) noexcept {
        return a + b;
    }
    static I
    isub(I a, I b) noexcept {
        return a - b;
    }
    static I
    iand(I a, I b) noexcept {
        return a & b;
    }
    static I
    ior(I a, I b) noexcept {
        return a | b;
    }
    // Interpret the low 32 bits of each 64-bit lane as a signed int and
    // convert to double (exact for the small exponents it is used on).
    static V
    cvt_lo32(I b) noexcept {
        return static_cast<double>(
            static_cast<std::int32_t>(b & 0xFFFFFFFFULL));
    }
};

template <class O>
struct Kern {
    using V = typename O::V;
    using I = typename O::I;

    static inline V
    horner(V u, const double* c, int deg) noexcept {
        V acc = O::set1(c[deg]);
        for (int i = deg - 1; i >= 0; --i) {
            acc = O::fmadd(acc, u, O::set1(c[i]));
        }
        return acc;
    }

    static inline V
    exp_v(V x) noexcept {
        x = O::min(O::max(x, O::set1(-kExpClamp)), O::set1(kExpClamp));
        const V kd = O::fmadd(x, O::set1(kInvLn2), O::set1(kMagic));
        const V n = O::sub(kd, O::set1(kMagic));
        V r = O::fmadd(n, O::set1(-kLn2Hi), x);
        r = O::fmadd(n, O::set1(-kLn2Lo), r);
        const V p = horner(r, kExpC, 11);
        // kd's mantissa field holds 2^51 + n; the 2^51 and the exponent bits
        // of kd shift out of the 64-bit word, leaving exactly (n+1023)<<52.
        const V scale =
            O::frombits(O::sll(O::iadd(O::tobits(kd), O::iset1(1023)), 52));
        return O::mul(p, scale);
    }

    static inline V
    log_v(V x) noexcept {
        const I bits = O::tobits(x);
        // x = 2^e * m with m in [0.5, 1): e = E - 1022 for biased exponent E.
        I e = O::isub(O::srl(bits, 52), O::iset1(1022));
        const I mbits = O::ior(O::iand(bits, O::iset1(0x000FFFFFFFFFFFFFULL)),
                               O::iset1(0x3FE0000000000000ULL));
        V m = O::frombits(mbits);
        V ed = O::cvt_lo32(e);
        const V mask = O::lt(m, O::set1(kSqrtHalf));
        m = O::blend(mask, O::add(m, m), m);
        ed = O::sub(ed, O::andb(mask, O::set1(1.0)));
        const V one = O::set1(1.0);
        const V s = O::div(O::sub(m, one), O::add(m, one));
        const V u = O::mul(s, s);
        const V R = horner(u, kLogR, 8);
        V res = O::fmadd(ed, O::set1(kLn2Lo), O::mul(s, R));
        res = O::fmadd(ed, O::set1(kLn2Hi), res);
        return res;
    }

    static inline V
    log1p_v(V z) noexcept {
        const V one = O::set1(1.0);
        const V u = O::add(one, z);
        // First-order correction for the rounding of 1+z.
        const V corr = O::div(O::sub(z, O::sub(u, one)), u);
        return O::add(log_v(u), corr);
    }

    static inline V
    sin_half_v(V t) noexcept {
        const V u = O::mul(t, t);
        return O::mul(t, horner(u, kSinP, 10));
    }

    static inline V
    sin_pi_v(V x) noexcept {
        const V mask = O::lt(O::set1(kHalfPi), x);
        const V rx = O::add(O::sub(O::set1(kPiHi), x), O::set1(kPiLo));
        return sin_half_v(O::blend(mask, rx, x));
    }

    static inline V
    cos_interior_v(V a) noexcept {  // cos a for a in (0, pi)
        return sin_half_v(O::add(O::sub(O::set1(kPi2Hi), a), O::set1(kPi2Lo)));
    }

    // log of a maximally-skewed standard stable draw from uniforms
    // (u1, u2) in (0,1)^2:  V = pi*u1, W = -log u2,
    //   log Z = [log sin(aV) - log sin V]
    //           + (d/a) * (log sin(dV) - log sin V - log W)
    // with the bracketed difference computed cancellation-free as
    //   log1p(-2 cos(V - dV/2) sin(dV/2) / sin V),
    // so every term carries an explicit factor that vanishes with d and the
    // result stays fully accurate down to d ~ 1e-14.
    static inline V
    logz_v(V u1, V u2, double alpha, double delta) noexcept {
        const V v = O::mul(O::set1(kPiHi), u1);
        const V w = O::sub(O::set1(0.0), log_v(u2));
        const V sv = sin_pi_v(v);
        const V hd = O::mul(O::set1(0.5 * delta), v);
        const V c = cos_interior_v(O::sub(v, hd));
        const V sh = sin_half_v(hd);
        const V lsd =
            log1p_v(O::div(O::mul(O::set1(-2.0), O::mul(c, sh)), sv));
        const V lsv = log_v(sv);
        const V lsvd = log_v(sin_pi_v(O::mul(O::set1(delta), v)));
        const V lw = log_v(w);
        const V inner = O::sub(O::sub(lsvd, lsv), lw);
        return O::fmadd(O::set1(delta / alpha), inner, lsd);
    }

    // Signed symmetric standard stable draw from uniforms (u1, u2):
    // U = pi*(u1 - 1/2), W = -log u2,
    //   S = sin(aU) / (cos U)^{1/a} * [cos(dU) / W]^{d/a},
    // assembled in the log domain with the sign of sin(aU) = sign(U).
    static inline V
    sym_v(V u1, V u2, double alpha, double delta) noexcept {
        const V bigU = O::mul(O::set1(kPiHi), O::sub(u1, O::set1(0.5)));
        const V absmask = O::frombits(O::iset1(0x7FFFFFFFFFFFFFFFULL));
        const V signmask = O::frombits(O::iset1(0x8000000000000000ULL));
        const V absU = O::andb(bigU, absmask);
        const V w = O::sub(O::set1(0.0), log_v(u2));
        const V saU = sin_half_v(O::mul(O::set1(alpha), bigU));
        const V cU = sin_half_v(
            O::add(O::sub(O::set1(kPi2Hi), absU), O::set1(kPi2Lo)));
        const V cdU = sin_half_v(
            O::add(O::sub(O::set1(kPi2Hi), O::mul(O::set1(delta), absU)),
                   O::set1(kPi2Lo)));
        V logabs = O::sub(log_v(O::andb(saU, absmask)),
                          O::mul(O::set1(1.0 / alpha), log_v(cU)));
        logabs = O::fmadd(O::set1(delta / alpha),
                          O::sub(log_v(cdU), log_v(w)), logabs);
        return O::orb(exp_v(logabs), O::andb(saU, signmask));
    }
};

// Fills u[0..2n) with the uniform pair stream for row i, columns
// j0..j0+n: u[2t] = u1(j0+t), u[2t+1] = u2(j0+t). Integer hashing is
// identical on every backend, so it is shared scalar code.
inline void
fill_uniform_pairs(std::uint64_t seed, std::uint64_t i, std::uint64_t j0,
                   std::size_t n, double* u) noexcept {
    for (std::size_t t = 0; t < n; ++t) {
        const std::uint64_t key = rng::derive_key(seed, i, j0 + t);
        u[2 * t] = rng::u53_open(rng::key_word(key, 0));
        u[2 * t + 1] = rng::u53_open(rng::key_word(key, 1));
    }
}

}  // namespace cc::kern::detail
