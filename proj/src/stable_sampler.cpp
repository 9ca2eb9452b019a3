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

#include "cc/stable_sampler.hpp"

#include <cmath>
#include <numbers>

#include "cc/errors.hpp"
#include "cc/rng.hpp"

namespace cc::stable {

StableParams::StableParams(double alpha_, Skew skew_) {
    if (!(alpha_ > 0.0) || !(alpha_ < 1.0)) {
        throw config_error("StableParams: alpha must lie in (0, 1)");
    }
    alpha = alpha_;
    delta = 1.0 - alpha_;
    skew = skew_;
}

StableParams
StableParams::from_delta(double delta_, Skew skew_) {
    if (!(delta_ > 0.0) || !(delta_ < 1.0)) {
        throw config_error("StableParams: delta must lie in (0, 1)");
    }
    StableParams p;
    p.alpha = 1.0 - delta_;
    p.delta = delta_;
    p.skew = skew_;
    if (!(p.alpha > 0.0)) {
        throw config_error(
            "StableParams: delta is too close to 1 (alpha underflows)");
    }
    return p;
}

namespace {

// Exact error-free addition: s + e == a + b with s = fl(a + b).
inline void
two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

}  // namespace

UniformPair
derive_uniforms(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    const std::uint64_t key = rng::derive_key(seed, i, j);
    UniformPair u;
    u.v = std::numbers::pi * rng::u53_open(rng::key_word(key, 0));
    u.w = -std::log(rng::u53_open(rng::key_word(key, 1)));
    return u;
}

double
sample_skewed(const StableParams& params, const UniformPair& u) {
    const double alpha = params.alpha;
    const double delta = params.delta;
    if (!(u.v > 0.0) || !(u.v < std::numbers::pi) || !(u.w > 0.0)) {
        throw input_error("sample_skewed: uniforms at a domain endpoint");
    }
    // Z = sin(alpha v) * sin(v)^(-1/alpha) * (sin(v delta) / w)^(delta/alpha).
    // Near alpha v = pi the rounding of the product alpha*v alone perturbs
    // sin(alpha v) by cot(alpha v) relative, so evaluate it there as
    // sin(v) - 2 cos(v - delta v/2) sin(delta v/2), which is addition-only
    // in that region (cos factor is nonpositive once alpha v >= 2).
    const double av = alpha * u.v;
    double sav;
    if (av < 2.0) {
        sav = std::sin(av);
    } else {
        const double hd = 0.5 * delta * u.v;
        sav = std::sin(u.v) - 2.0 * std::cos(u.v - hd) * std::sin(hd);
    }
    return sav * std::pow(std::sin(u.v), -1.0 / alpha) *
           std::pow(std::sin(u.v * delta) / u.w, delta / alpha);
}

double
log_sample_skewed(const StableParams& params, const UniformPair& u) {
    const double alpha = params.alpha;
    const double delta = params.delta;
    const double sv = std::sin(u.v);
    // log(sin(alpha v)/sin v) without subtracting nearly equal terms:
    // sin v - sin(alpha v) = 2 cos(v - delta v / 2) sin(delta v / 2).
    const double hd = 0.5 * delta * u.v;
    const double lsd = std::log1p(-2.0 * std::cos(u.v - hd) * std::sin(hd) / sv);
    // log Z = lsd + (delta/alpha) (log sin(v delta) - log sin v - log w).
    // The bracketed terms reach ~40 in magnitude while log Z itself is
    // small, so accumulate with error-free transforms: plain summation
    // would cost several ulps of exp(log Z).
    const double r = delta / alpha;
    double s1;
    double e1;
    two_sum(std::log(std::sin(u.v * delta)), -std::log(sv), s1, e1);
    double s2;
    double e2;
    two_sum(s1, -std::log(u.w), s2, e2);
    const double p = r * s2;
    const double pe = std::fma(r, s2, -p);  // exact product residual
    double s3;
    double e3;
    two_sum(lsd, p, s3, e3);
    return s3 + (e3 + pe + r * (e1 + e2));
}

double
sample_symmetric(const StableParams& params, const UniformPair& u) {
    const double alpha = params.alpha;
    const double delta = params.delta;
    const double big_u = u.v - std::numbers::pi / 2.0;  // uniform on (-pi/2, pi/2)
    const double abs_u = std::fabs(big_u);
    // S = sin(alpha U) / cos(U)^(1/alpha) * (cos(delta U) / w)^(delta/alpha),
    // assembled in the log domain on |sin(alpha U)| with the sign of U
    // (sign(sin(alpha U)) = sign(U) since |alpha U| < pi).
    const double log_abs =
        std::log(std::sin(alpha * abs_u)) -
        std::log(std::cos(abs_u)) / alpha +
        (delta / alpha) * (std::log(std::cos(delta * abs_u)) - std::log(u.w));
    const double mag = std::exp(log_abs);
    return big_u < 0.0 ? -mag : mag;
}

}  // namespace cc::stable
