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

#include "cc/entropy.hpp"

#include <cmath>

#include "cc/errors.hpp"

namespace cc {
namespace ent {

namespace {

// Power law delta = C nu (log m)^(-gamma) pinned to the two published
// example points (m = 2^64, nu = 0.01) -> 7e-6 and (m = 1e6, nu = 0.1) -> 1e-4.
constexpr double kFocsGamma = 0.30574455203316853;
constexpr double kFocsLogC = -6.1049337063583531;

void check_moments(double f_alpha, double f1) {
    if (!(f_alpha > 0.0) || !std::isfinite(f_alpha)) {
        throw input_error("f_alpha must be positive and finite");
    }
    if (!(f1 > 0.0) || !std::isfinite(f1)) {
        throw input_error("f1 must be positive and finite");
    }
}

void check_order(double alpha) {
    if (alpha == 1.0) {
        throw config_error(
            "entropy order alpha = 1 is degenerate; use a nearby alpha");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw config_error("entropy order alpha must be positive and finite");
    }
}

}  // namespace

double renyi(double f_alpha, double f1, double alpha, double base) {
    check_moments(f_alpha, f1);
    check_order(alpha);
    if (!(base > 1.0)) throw config_error("log base must exceed 1");
    const double log_ratio = std::log(f_alpha) - alpha * std::log(f1);
    return log_ratio / (1.0 - alpha) / std::log(base);
}

double tsallis(double f_alpha, double f1, double alpha) {
    check_moments(f_alpha, f1);
    check_order(alpha);
    const double log_ratio = std::log(f_alpha) - alpha * std::log(f1);
    return std::expm1(log_ratio) / (1.0 - alpha);
}

EntropyEstimate shannon_from_sketch(const sketch::CCSketch& s,
                                    est::Estimator method, EntropyKind via,
                                    double base, double calibration) {
    const double alpha = s.params().alpha;
    if (!(s.params().delta <= 0.2)) {
        throw config_error(
            "Shannon proxy needs the sketch's delta = 1 - alpha <= 0.2, got " +
            std::to_string(s.params().delta));
    }
    if (!(base > 1.0)) throw config_error("log base must exceed 1");
    const bool wants_symmetric = method == est::Estimator::SymmetricGM;
    if (wants_symmetric != (s.params().skew == stable::Skew::Symmetric)) {
        throw config_error(wants_symmetric
                               ? "the sym estimator needs a symmetric-projection "
                                 "sketch"
                               : "this estimator needs a maximally-skewed sketch");
    }

    est::MomentEstimate m;
    switch (method) {
        case est::Estimator::NewInversePower:
            m = est::estimate_new(s.x(), alpha, s.f1());
            break;
        case est::Estimator::GeometricMean:
            m = est::estimate_gm(s.x(), alpha);
            break;
        case est::Estimator::HarmonicMean:
            m = est::estimate_hm(s.x(), alpha);
            break;
        case est::Estimator::SampleMinimum:
            m = est::estimate_min(s.x(), alpha);
            break;
        case est::Estimator::SymmetricGM:
            m = est::estimate_symmetric_gm(s.x(), alpha, calibration);
            break;
    }

    EntropyEstimate out;
    out.kind = via;
    out.alpha_used = alpha;
    out.moment_source = method;
    if (via == EntropyKind::Renyi) {
        out.shannon_proxy = renyi(m.value, s.f1(), alpha, base);
    } else {
        out.shannon_proxy = tsallis(m.value, s.f1(), alpha) / std::log(base);
    }
    const double log_d =
        std::log(static_cast<double>(s.domain_size())) / std::log(base);
    if (out.shannon_proxy < 0.0 || out.shannon_proxy > log_d) {
        out.diagnostic = "estimate outside [0, log d] = [0, " +
                         std::to_string(log_d) + "] (noise, not an error)";
    }
    if (!m.warning.empty()) {
        if (!out.diagnostic.empty()) out.diagnostic += "; ";
        out.diagnostic += m.warning;
    }
    return out;
}

double choose_delta(double d, double m, double nu, DeltaVariant variant) {
    if (!(d >= 2.0) || !std::isfinite(d)) {
        throw config_error("choose_delta needs domain size d >= 2");
    }
    if (!(m >= 2.0) || !std::isfinite(m)) {
        throw config_error("choose_delta needs stream length m >= 2");
    }
    if (!(nu > 0.0) || !(nu < 1.0)) {
        throw config_error("choose_delta needs nu in (0, 1)");
    }
    if (variant == DeltaVariant::ITW08) {
        const double c = nu / (4.0 * std::log(d) * std::log(m));
        return c / (16.0 * std::log(1.0 / c));
    }
    return std::exp(kFocsLogC + std::log(nu) -
                    kFocsGamma * std::log(std::log(m)));
}

}  // namespace ent
}  // namespace cc
