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

#include <cstdint>

// Draws from the standard alpha-stable families used by the sketch: the
// maximally right-skewed family (unit scale, all mass on the positive axis
// for alpha < 1) and the symmetric family. Randomness is counter-based:
// every matrix cell (i, j) under a seed maps to one deterministic draw, so
// streams of any length and merged sketches see identical values without
// storing a projection matrix.
//
// These are the reference-tier scalar routines built on libm. The batch
// sampling used inside the sketch hot loop lives in cc/kernels.hpp and
// computes the same chain with vectorized polynomial kernels.

namespace cc::stable {

enum class Skew {
    MaximallySkewed,
    Symmetric,
};

struct StableParams {
    double alpha{0.0};
    double delta{0.0};  // 1 - alpha, cached once so every site agrees on it
    Skew skew{Skew::MaximallySkewed};

    // Validates 0 < alpha < 1; throws config_error otherwise.
    explicit StableParams(double alpha_, Skew skew_ = Skew::MaximallySkewed);

    // Builds params from delta = 1 - alpha, keeping the given delta exact
    // rather than recomputing it through alpha. Prefer this when delta is
    // the quantity specified (it usually is).
    static StableParams
    from_delta(double delta_, Skew skew_ = Skew::MaximallySkewed);

 private:
    StableParams() = default;
};

// The two underlying variates of one draw: an angle v uniform on the open
// interval (0, pi) and a unit-exponential w > 0.
struct UniformPair {
    double v{0.0};
    double w{0.0};
};

// Deterministic uniforms for matrix cell (i, j) under `seed`. Both members
// come from open-interval uniforms, so v is never 0 or pi and w is finite
// and positive.
UniformPair
derive_uniforms(std::uint64_t seed, std::uint64_t i, std::uint64_t j);

// One draw Z > 0 from the maximally-skewed standard family, computed in the
// linear domain. Accurate and overflow-free for the alpha range the sketch
// uses; prefer log_sample_skewed when delta is tiny or alpha is far below
// 1/2.
double
sample_skewed(const StableParams& params, const UniformPair& u);

// log Z computed term by term in the log domain. Never overflows, and stays
// fully accurate down to delta = 1e-12 and beyond, where the linear form
// would lose the (sin(v*delta)/w)^(delta/alpha) factor to cancellation.
double
log_sample_skewed(const StableParams& params, const UniformPair& u);

// One signed draw from the symmetric standard family via U = v - pi/2.
double
sample_symmetric(const StableParams& params, const UniformPair& u);

}  // namespace cc::stable
