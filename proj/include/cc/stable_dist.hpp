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

#include <cstddef>
#include <vector>

// Distribution-side machinery for the maximally-skewed standard family in
// the near-1 alpha regime, parametrized throughout by delta = 1 - alpha:
// the exponent function g, the exact and approximate CDFs, a monotone
// interpolation table for bulk CDF evaluation, the scale-model
// log-likelihood, and closed-form fractional moments.

namespace cc::stable {

namespace detail {

// log g(theta) for theta in (0, pi], valid for delta in (0, 1]. Computed
// cancellation-free, so it stays accurate when delta is tiny (alpha -> 1)
// and when alpha is tiny (delta -> 1, where g -> 1 identically).
double
log_g(double theta, double delta) noexcept;

}  // namespace detail

// The exponent function g(theta) on [0, pi]; g(0) is the limit
// delta * alpha^(alpha/delta), and g increases monotonically to a pole at
// pi. Requires delta in (0, 0.5); larger deltas leave the regime this
// module's approximations are built for and are rejected.
double
g_eval(double theta, double delta);

// Exact CDF of the maximally-skewed standard draw at t > 0:
//   F(t) = (1/pi) * Integral_0^pi exp(-t^(-alpha/delta) g(theta)) dtheta,
// by adaptive panel quadrature to absolute tolerance 1e-10. Requires delta
// in (0, 0.5). Returns 0 for t <= 0.
double
cdf_exact(double t, double delta);

// One-exponential approximation F~(t) = exp(-t^(-alpha/delta) g(0)). An
// upper bound on cdf_exact pointwise; tight in the right tail, loose by an
// O(1) amount near the distribution's lower end regardless of delta.
double
cdf_approx(double t, double delta);

// Monotone cubic interpolation table for cdf_exact, indexed on log t. The
// knots blanket the range that bulk sampling actually visits: a uniform
// band of 1200 knots on log t in [-15 delta, 60 delta] where the mass
// concentrates, then 1199 geometrically spaced knots continuing to
// log t = 25 for the heavy right tail. Interpolation is shape-preserving
// (Fritsch-Carlson), so the table is monotone like the CDF it represents.
class CdfTable {
 public:
    // Builds the table for delta in (0, 0.5) by evaluating cdf_exact at
    // every knot. Cost is a few thousand quadratures.
    static CdfTable
    build(double delta);

    // Interpolated CDF at t; clamps to the first/last table value outside
    // the knot range (those ends carry under 1e-20 of probability mass).
    double
    operator()(double t) const;

    std::size_t
    size() const noexcept {
        return u_.size();
    }

 private:
    CdfTable() = default;

    std::vector<double> u_;  // knots in log t, strictly increasing
    std::vector<double> f_;  // cdf values at the knots
    std::vector<double> d_;  // interpolant slopes df/du at the knots
};

// Log-likelihood of positive observations x under the scale model
// X = c * Z with Z a standard maximally-skewed draw, using the
// one-exponential density, evaluated at scale c = c_alpha^(1/alpha).
// Its stationary point in c_alpha is the closed-form scale estimate
//   c_alpha = (1 / (delta^delta alpha^alpha)) * (k / sum_j x_j^(-alpha/delta))^delta.
double
mle_loglik(const std::vector<double>& x, double c_alpha, double alpha);

// E[X^lambda] for X distributed as F^(1/alpha) * Z with Z standard
// maximally skewed: f_alpha^(lambda/alpha) * Gamma(1 - lambda/alpha) /
// Gamma(1 - lambda). Finite exactly when lambda < alpha; lambda may be
// negative.
double
neg_moment(double lambda, double alpha, double f_alpha);

}  // namespace cc::stable
