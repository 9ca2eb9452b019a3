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

#include "cc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cc/cc_sketch.hpp"
#include "cc/errors.hpp"
#include "cc/rng.hpp"

namespace cc {
namespace oracle {

namespace {

// Neumaier-compensated accumulator.
struct NSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double t = s + x;
        c += std::fabs(s) >= std::fabs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

void check_base(double base) {
    if (!(base > 1.0) || !std::isfinite(base)) {
        throw config_error("entropy base must be a finite real > 1");
    }
}

// Linear-interpolation quantile of an ascending-sorted array.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

double exact_moment(const SparseVector& v, double alpha) {
    validate_sparse_vector(v);
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw config_error("exact_moment needs alpha > 0");
    }
    NSum sum;
    bool any = false;
    for (const auto& e : v.entries) {
        if (e.value > 0.0) {
            sum.add(std::pow(e.value, alpha));
            any = true;
        }
    }
    if (!any) throw input_error("moment of an all-zero vector is undefined here");
    return sum.value();
}

double exact_shannon(const SparseVector& v, double base) {
    validate_sparse_vector(v);
    check_base(base);
    NSum mass;      // S = sum v
    NSum weighted;  // L = sum v log v
    bool any = false;
    for (const auto& e : v.entries) {
        if (e.value > 0.0) {
            mass.add(e.value);
            weighted.add(e.value * std::log(e.value));
            any = true;
        }
    }
    if (!any) throw input_error("entropy of an all-zero vector is undefined");
    const double s = mass.value();
    return (std::log(s) - weighted.value() / s) / std::log(base);
}

double exact_renyi(const SparseVector& v, double alpha, double base) {
    return ent::renyi(exact_moment(v, alpha), exact_moment(v, 1.0), alpha, base);
}

double exact_tsallis(const SparseVector& v, double alpha) {
    return ent::tsallis(exact_moment(v, alpha), exact_moment(v, 1.0), alpha);
}

MCReport run_mc(const MCConfig& config) {
    validate_sparse_vector(config.vector);
    if (config.trials < 100) throw config_error("run_mc needs trials >= 100");
    if (config.k < 1) throw config_error("run_mc needs k >= 1");
    const bool symmetric = config.estimator == est::Estimator::SymmetricGM;
    const stable::StableParams params(
        config.alpha,
        symmetric ? stable::Skew::Symmetric : stable::Skew::MaximallySkewed);

    const double truth = config.mode == MCMode::Moment
                             ? exact_moment(config.vector, config.alpha)
                             : exact_shannon(config.vector, config.base);

    double calibration = 0.0;
    if (symmetric) {
        calibration = est::calibrate_symmetric_gm(
            config.alpha, config.k, 100000,
            rng::derive_key(config.base_seed, 0x53CA11B, 2));
    }

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(config.trials));
    std::int64_t errors = 0;
    for (std::int64_t t = 0; t < config.trials; ++t) {
        const std::uint64_t seed =
            rng::derive_key(config.base_seed, static_cast<std::uint64_t>(t), 1);
        try {
            const auto sk = sketch::CCSketch::project_dense(config.vector,
                                                            config.k, params, seed);
            double val = 0.0;
            if (config.mode == MCMode::Moment) {
                const std::span<const double> x(sk.x());
                est::MomentEstimate e;
                switch (config.estimator) {
                    case est::Estimator::NewInversePower:
                        e = est::estimate_new(x, config.alpha, sk.f1());
                        break;
                    case est::Estimator::GeometricMean:
                        e = est::estimate_gm(x, config.alpha);
                        break;
                    case est::Estimator::HarmonicMean:
                        e = est::estimate_hm(x, config.alpha);
                        break;
                    case est::Estimator::SampleMinimum:
                        e = est::estimate_min(x, config.alpha);
                        break;
                    case est::Estimator::SymmetricGM:
                        e = est::estimate_symmetric_gm(x, config.alpha, calibration);
                        break;
                }
                val = e.value;
            } else {
                val = ent::shannon_from_sketch(sk, config.estimator, config.via,
                                               config.base, calibration)
                          .shannon_proxy;
            }
            if (!std::isfinite(val)) {
                throw numeric_error("estimate is not finite");
            }
            values.push_back(val);
        } catch (const numeric_error&) {
            ++errors;
        } catch (const input_error&) {
            ++errors;  // includes model_violation; misconfiguration propagates
        }
    }
    if (values.empty()) {
        throw numeric_error("every Monte-Carlo trial failed (" +
                            std::to_string(errors) + " errors)");
    }

    MCReport report;
    report.trials = config.trials;
    report.errors = errors;
    report.truth = truth;

    NSum mean_sum;
    NSum mse_sum;
    for (const double v : values) {
        mean_sum.add(v);
        const double rel = (v - truth) / truth;
        mse_sum.add(rel * rel);
    }
    const auto n = static_cast<double>(values.size());
    report.mean = mean_sum.value() / n;
    report.normalized_mse = mse_sum.value() / n;
    report.normalized_bias = (report.mean - truth) / truth;

    std::vector<double> abs_err(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        abs_err[i] = std::fabs(values[i] - truth);
    }
    std::sort(abs_err.begin(), abs_err.end());
    report.median_abs_error = quantile_sorted(abs_err, 0.5);

    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < kQuantiles.size(); ++i) {
        report.percentiles[i] = quantile_sorted(values, kQuantiles[i]);
    }
    return report;
}

}  // namespace oracle
}  // namespace cc
