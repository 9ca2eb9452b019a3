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

#include "cc/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cc/errors.hpp"
#include "cc/kernels.hpp"

namespace cc {
namespace est {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0) || !std::isfinite(alpha)) {
        throw config_error("alpha must lie strictly inside (0, 1), got " +
                           std::to_string(alpha));
    }
}

void check_positive(std::span<const double> x) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] > 0.0) || !std::isfinite(x[j])) {
            throw model_violation(
                "projected value x[" + std::to_string(j) + "] = " +
                std::to_string(x[j]) +
                " is not strictly positive; the accumulated signal must be "
                "nonnegative (and nonzero) at estimation time");
        }
    }
}

void check_nonempty(std::span<const double> x) {
    if (x.empty()) throw input_error("empty projection array");
}

void check_pairs(std::span<const double> x) {
    if (x.size() < 2) {
        throw input_error("estimator needs at least 2 projected values, got " +
                          std::to_string(x.size()));
    }
}

}  // namespace

const char* estimator_name(Estimator e) {
    switch (e) {
        case Estimator::NewInversePower:
            return "new";
        case Estimator::GeometricMean:
            return "gm";
        case Estimator::HarmonicMean:
            return "hm";
        case Estimator::SampleMinimum:
            return "min";
        case Estimator::SymmetricGM:
            return "sym";
    }
    return "unknown";
}

MomentEstimate estimate_new(std::span<const double> x, double alpha, double f1) {
    check_alpha(alpha);
    check_nonempty(x);
    check_positive(x);
    if (!(f1 > 0.0) || !std::isfinite(f1)) {
        throw input_error("first moment f1 must be positive, got " +
                          std::to_string(f1));
    }
    const double delta = 1.0 - alpha;
    const std::size_t k = x.size();
    const double log_f1 = std::log(f1);
    const double scale = -alpha / delta;

    // exponents e_j = -(alpha/delta) * log(x_j/f1); log-sum-exp with
    // max-subtraction keeps the sum finite for delta down to 1e-14.
    std::vector<double> e(k);
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
        e[j] = scale * (std::log(x[j]) - log_f1);
        m = std::max(m, e[j]);
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) sum += std::exp(e[j] - m);
    const double log_sum_exp = m + std::log(sum);

    const double log_value = -delta * std::log(delta) +
                             delta * (std::log(static_cast<double>(k)) - log_sum_exp) +
                             alpha * log_f1;
    MomentEstimate out;
    out.value = std::exp(log_value);
    out.estimator = Estimator::NewInversePower;
    out.theo_rel_var = delta * delta * (3.0 - 2.0 * delta) / static_cast<double>(k);
    return out;
}

MomentEstimate estimate_gm(std::span<const double> x, double alpha) {
    check_alpha(alpha);
    check_pairs(x);
    check_positive(x);
    const double delta = 1.0 - alpha;
    const auto k = static_cast<double>(x.size());

    double log_prod = 0.0;
    for (const double v : x) log_prod += std::log(v);

    const double log_bias = k * (std::lgamma(1.0 - alpha / k) - std::lgamma(1.0 - 1.0 / k));
    MomentEstimate out;
    out.value = std::exp(log_bias + (alpha / k) * log_prod);
    out.estimator = Estimator::GeometricMean;
    out.theo_rel_var =
        (std::numbers::pi * std::numbers::pi / 6.0) * delta * (1.0 + alpha) / k;
    if (delta < 1e-5) {
        out.warning = "unstable-gm: bias factor loses accuracy for delta < 1e-5 "
                      "(delta = " + std::to_string(delta) + ")";
    }
    return out;
}

double hm_factor(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0) || !std::isfinite(alpha)) {
        throw config_error("hm_factor: alpha must lie in (0, 1], got " +
                           std::to_string(alpha));
    }
    // 2 Gamma^2(1+alpha)/Gamma(1+2 alpha) - 1 == expm1 of the log ratio;
    // expm1 preserves the O(delta) result through the alpha -> 1 cancellation.
    const double log_ratio = std::numbers::ln2 + 2.0 * std::lgamma(1.0 + alpha) -
                             std::lgamma(1.0 + 2.0 * alpha);
    return std::expm1(log_ratio);
}

double hm_factor_expansion(double delta) {
    if (!(delta >= 0.0) || !(delta < 1.0)) {
        throw config_error("hm_factor_expansion: delta must lie in [0, 1)");
    }
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    return delta + delta * delta * (2.0 - pi2_6);
}

MomentEstimate estimate_hm(std::span<const double> x, double alpha) {
    check_alpha(alpha);
    check_pairs(x);
    check_positive(x);
    const auto k = static_cast<double>(x.size());

    double sum = 0.0;
    for (const double v : x) sum += std::exp(-alpha * std::log(v));

    const double factor = hm_factor(alpha);
    MomentEstimate out;
    out.value = (k / std::tgamma(1.0 + alpha)) / sum * (1.0 - factor / k);
    out.estimator = Estimator::HarmonicMean;
    out.theo_rel_var = factor / k;
    return out;
}

MomentEstimate estimate_min(std::span<const double> x, double alpha) {
    check_alpha(alpha);
    check_nonempty(x);
    check_positive(x);
    double min_log = std::numeric_limits<double>::infinity();
    for (const double v : x) min_log = std::min(min_log, std::log(v));
    MomentEstimate out;
    out.value = std::exp(alpha * min_log);
    out.estimator = Estimator::SampleMinimum;
    out.theo_rel_var = std::nullopt;
    return out;
}

MomentEstimate estimate_symmetric_gm(std::span<const double> x, double alpha,
                                     double calibration) {
    check_alpha(alpha);
    check_pairs(x);
    if (!(calibration > 0.0) || !std::isfinite(calibration)) {
        throw config_error("symmetric-gm calibration must be positive, got " +
                           std::to_string(calibration));
    }
    const auto k = static_cast<double>(x.size());
    double log_prod = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double a = std::fabs(x[j]);
        if (a == 0.0 || !std::isfinite(a)) {
            throw input_error("symmetric projection x[" + std::to_string(j) +
                              "] is zero or non-finite; cannot take its log");
        }
        log_prod += std::log(a);
    }
    MomentEstimate out;
    out.value = std::exp((alpha / k) * log_prod - k * std::log(calibration));
    out.estimator = Estimator::SymmetricGM;
    out.theo_rel_var = std::nullopt;
    return out;
}

double calibrate_symmetric_gm(double alpha, std::size_t k, std::int64_t trials,
                              std::uint64_t seed) {
    check_alpha(alpha);
    if (k < 1) throw config_error("calibration needs k >= 1");
    if (trials < 100000) {
        throw config_error("calibration needs trials >= 1e5, got " +
                           std::to_string(trials));
    }
    const double lambda = alpha / static_cast<double>(k);
    constexpr std::size_t kBlock = 4096;
    std::vector<double> draws(kBlock);
    // Neumaier-compensated mean of |S|^lambda over deterministic draws.
    double sum = 0.0, comp = 0.0;
    std::int64_t done = 0;
    while (done < trials) {
        const auto n = static_cast<std::size_t>(
            std::min<std::int64_t>(kBlock, trials - done));
        kern::vsym(seed, 0, static_cast<std::uint64_t>(done), alpha, draws.data(), n);
        for (std::size_t t = 0; t < n; ++t) {
            const double term = std::exp(lambda * std::log(std::fabs(draws[t])));
            const double s = sum + term;
            comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - s) + term
                                                        : (term - s) + sum;
            sum = s;
        }
        done += static_cast<std::int64_t>(n);
    }
    return (sum + comp) / static_cast<double>(trials);
}

}  // namespace est
}  // namespace cc
