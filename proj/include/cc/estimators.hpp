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
#include <optional>
#include <span>
#include <string>

namespace cc {
namespace est {

// Frequency-moment estimators over the k projected accumulators of a sketch.
// Every estimator maps k stable-projected values x_1..x_k (plus, for the
// inverse-power estimator, the exact first moment f1) to an estimate of
// F = sum_i A[i]^alpha, together with the leading-order theoretical relative
// variance Var/F^2 when a closed form is known.

enum class Estimator {
    NewInversePower,  // inverse power mean with the delta^delta correction
    GeometricMean,    // gamma-debiased geometric mean
    HarmonicMean,     // gamma-debiased harmonic mean with 1/k correction
    SampleMinimum,    // min_j x_j^alpha, the delta -> 0 limit
    SymmetricGM,      // geometric mean over symmetric projections (baseline)
};

const char* estimator_name(Estimator e);

struct MomentEstimate {
    double value = 0.0;  // estimated F, always > 0 on success
    Estimator estimator = Estimator::NewInversePower;
    // Leading-order Var/F^2 (O(1/k^2) terms dropped); nullopt when no closed
    // form is known (SampleMinimum, SymmetricGM).
    std::optional<double> theo_rel_var;
    // Non-fatal numerical-stability note ("" when clean). Set e.g. by the
    // geometric-mean estimator when delta = 1 - alpha < 1e-5.
    std::string warning;
};

// Inverse-power estimator:
//   F_hat = (1/delta^delta) * [ k / sum_j (x_j/f1)^(-alpha/delta) ]^delta * f1^alpha
// evaluated with log-sum-exp max-subtraction so that it stays finite and
// positive down to delta = 1e-14. theo_rel_var = delta^2 (3 - 2 delta)/k.
// Errors: empty x -> input_error; any x_j <= 0 or non-finite ->
// model_violation (the nonnegative-signal assumption failed at read time).
MomentEstimate estimate_new(std::span<const double> x, double alpha, double f1);

// Geometric-mean estimator:
//   F_hat = [Gamma(1 - alpha/k)/Gamma(1 - 1/k)]^k * prod_j x_j^(alpha/k)
// (log domain throughout). Exactly unbiased; theo_rel_var =
// (pi^2/6) delta (1+alpha)/k. Requires k >= 2. Sets MomentEstimate::warning
// instead of failing when delta < 1e-5 (the bias factor loses accuracy there).
MomentEstimate estimate_gm(std::span<const double> x, double alpha);

// Harmonic-mean estimator:
//   F_hat = (k/Gamma(1+alpha)) / sum_j x_j^(-alpha) * (1 - hm_factor(alpha)/k)
// theo_rel_var = hm_factor(alpha)/k. Requires k >= 2.
MomentEstimate estimate_hm(std::span<const double> x, double alpha);

// Variance factor of the harmonic-mean estimator:
//   hm_factor = 2 Gamma^2(1+alpha)/Gamma(1+2 alpha) - 1
// computed via log-gamma and expm1 so the alpha -> 1 cancellation keeps full
// precision. hm_factor(0) = 1, hm_factor(1) = 0.
double hm_factor(double alpha);

// Quadratic small-delta expansion of hm_factor(1 - delta):
//   delta + delta^2 (2 - pi^2/6)
// the two agree to O(delta^3); exposed for cross-checking.
double hm_factor_expansion(double delta);

// Sample-minimum estimator: exp(alpha * min_j log x_j) = (min_j x_j)^alpha.
// No closed-form variance (theo_rel_var is nullopt). Requires k >= 1.
MomentEstimate estimate_min(std::span<const double> x, double alpha);

// Geometric-mean estimator over *symmetric* stable projections (the
// baseline that cannot reach O(delta^2) variance):
//   F_hat = prod_j |x_j|^(alpha/k) / calibration^k
// where calibration = E|S|^(alpha/k) for a standard symmetric draw S, as
// produced by calibrate_symmetric_gm with the same (alpha, k). Signs are
// discarded; an all-zero x is an input error (so is any exact zero, which
// the continuous projection produces with probability 0).
MomentEstimate estimate_symmetric_gm(std::span<const double> x, double alpha,
                                     double calibration);

// Monte-Carlo normalizer E|S|^(alpha/k) over `trials` standard symmetric
// stable draws, deterministic in `seed`. Replaces a closed-form constant
// with an empirical one; trials >= 1e5 keeps the calibration error under
// the estimator's own noise floor.
double calibrate_symmetric_gm(double alpha, std::size_t k, std::int64_t trials,
                              std::uint64_t seed);

}  // namespace est
}  // namespace cc
