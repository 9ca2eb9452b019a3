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

namespace cc {
namespace tail {

// Chernoff tail-bound constants for the inverse-power moment estimator.
//
// With y = Z^(-alpha/delta) for a standard maximally-skewed draw Z, the
// estimator's deviation events reduce to sums of i.i.d. y's, and the optimal
// Chernoff exponents come from the moment generating functions
//   E exp(-T y)  (right tail, T > 0)   and   E exp(+T y)  (left tail,
//   T < g(0+) = delta * alpha^(alpha/delta), the essential rate of y's tail).
// Both MGFs admit a power series in s = T e / delta with coefficients p_n
// (product_term below); the series converges for s below
// rho(delta) = e * alpha^(alpha/delta), which is 1 + delta/2 + O(delta^2)
// for small delta and e at delta = 1. The solver uses the series where it
// converges comfortably and continues with the direct theta-integral form of
// the MGFs elsewhere, so the optimum is found for every epsilon.

enum class Tail { Right, Left };
enum class SeriesSign { Alternating, Positive };
enum class SampleRegime { Conservative9, SmallNu6 };

struct TailBoundResult {
    Tail tail = Tail::Right;
    double epsilon = 0.0;      // multiplicative deviation the bound is for
    double delta_param = 0.0;  // delta = 1 - alpha
    double t_star = 0.0;       // optimal MGF argument T (> 0)
    // Best per-projection Chernoff exponent: P(deviation) <= exp(-k*exponent).
    double exponent = 0.0;
    // G/delta^2 where G = epsilon^2/exponent; the delta-free way to compare
    // curves across delta (they collapse onto a common shape).
    double g_over_delta_sq = 0.0;
};

// p_n = prod_{j=0}^{n-1} (n - j*delta) / ((n - j) * e), the normalized series
// coefficient; equals (delta/e)^n * Gamma(1 + n/delta)/(n! * Gamma(1 + n*alpha/delta)).
// p_1 = 1/e for every delta; p_n = e^{-n} at delta = 1; always
// 0 < p_n <= n^n/(n! e^n) <= 1/sqrt(2 pi n).
double product_term(std::int64_t n, double delta);

struct SeriesEval {
    double value = 0.0;       // sum_{n>=0} (+-s)^n p_n, p_0 = 1
    double derivative = 0.0;  // d(value)/ds
};

// Evaluates the MGF series at s in (0,1). Truncates when both the value term
// and the derivative term drop below 1e-15 of their partial sums; throws
// numeric_error if 500 terms do not reach that (s too close to the
// convergence radius) — callers then switch to the integral form.
SeriesEval series_value(double s, double delta, SeriesSign sign);

// Finds the optimal T for the requested tail at deviation epsilon
// (epsilon > 0 for Right, 0 < epsilon < 1 for Left) and delta in (0, 1],
// solving the stationarity condition
//   E[y e^{-+T y}] / E[e^{-+T y}] = (1/delta) * (1 +- epsilon)^(-1/delta)
// to an absolute residual below 1e-12 in the delta-normalized ratio.
// The left tail's (1 - epsilon)^(-1/delta) is assembled in log space so it
// never overflows at tiny delta. Throws numeric_error if bracketing or the
// residual target fails (loudly, rather than returning a suboptimal point).
// The left-tail optimum always satisfies t_star * e / delta < rho(delta)
// (its T never exceeds g(0)); the right-tail optimum leaves the series
// convergence disc once nu = epsilon/delta is large enough, where the
// solver switches to the integral form of the same stationarity condition.
TailBoundResult solve_tail(Tail tail, double epsilon, double delta);

// Exact exponents at delta = 1 (where y is a standard exponential):
//   Right: log(1 + eps) - eps/(1 + eps)
//   Left:  log(1 - eps) + eps/(1 - eps)
double closed_form_delta1(Tail tail, double epsilon);

// The common nu -> 0 limit of G_R/delta^2 and G_L/delta^2: 6 - 4*delta.
double asymptotic_g(double delta);

// Projections needed for an additive-nu entropy guarantee at failure
// probability fail_prob: ceil(C * log(2/fail_prob) / nu^2) with C = 9
// (conservative) or C = 6 (valid for small nu).
std::int64_t sample_size(double nu, double fail_prob, SampleRegime regime);

// Right-tail bound for the sample-minimum estimator at small delta:
//   exp(k * log(1/2) * [delta + delta/log(1+eps) + delta/(delta*log(delta) + log(1+eps))])
// (the O(delta^2) remainder is dropped). Requires delta <= 0.1 and a large
// enough epsilon: throws config_error when delta*log(delta) + log(1+eps) <= 0,
// where the truncated form stops being meaningful. Result clamped to (0, 1].
double min_right_bound(double epsilon, double delta, std::int64_t k);

}  // namespace tail
}  // namespace cc
