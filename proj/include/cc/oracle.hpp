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

// Ground-truth statistics computed directly from a sparse vector, plus the
// Monte-Carlo harness that compares sketch estimators against them. The
// ground-truth side uses compensated summation so its error is orders of
// magnitude below any tolerance the harness tests; the harness derives one
// fresh counter-RNG key per trial from (base_seed, trial index), which makes
// every report a pure function of its config.

#include <array>
#include <cstdint>

#include "cc/entropy.hpp"
#include "cc/estimators.hpp"
#include "cc/sparse_vector.hpp"

namespace cc {
namespace oracle {

// Sum of value^alpha over the entries (zero values contribute nothing).
// Throws config_error unless alpha > 0; input_error if the vector has no
// positive entry.
double exact_moment(const SparseVector& v, double alpha);

// -sum p_i log_base(p_i) with p_i = value_i / sum(values), evaluated as
// log(S) - (sum v log v)/S to avoid per-entry divisions. Zero entries
// contribute 0. Throws config_error unless base > 1; input_error on an
// all-zero vector.
double exact_shannon(const SparseVector& v, double base);

// log(F_alpha / F_1^alpha) / (1 - alpha), in units of log(base).
double exact_renyi(const SparseVector& v, double alpha, double base);

// (F_alpha / F_1^alpha - 1) / (1 - alpha), natural units.
double exact_tsallis(const SparseVector& v, double alpha);

// What the per-trial statistic is: the moment estimate itself, or the
// Shannon-entropy proxy computed from it.
enum class MCMode {
    Moment,
    Entropy,
};

struct MCConfig {
    SparseVector vector;
    std::size_t k = 0;
    double alpha = 0.0;
    est::Estimator estimator = est::Estimator::NewInversePower;
    std::int64_t trials = 0;  // >= 100
    std::uint64_t base_seed = 0;
    MCMode mode = MCMode::Moment;
    ent::EntropyKind via = ent::EntropyKind::Renyi;  // Entropy mode only
    double base = 2.0;                               // Entropy mode only
};

// Quantile levels reported by every MCReport, in order.
inline constexpr std::array<double, 7> kQuantiles = {0.01, 0.05, 0.25, 0.5,
                                                     0.75, 0.95, 0.99};

struct MCReport {
    std::int64_t trials = 0;  // requested; stats cover trials - errors
    std::int64_t errors = 0;  // trials whose estimator raised an error
    double truth = 0.0;
    double mean = 0.0;
    double normalized_mse = 0.0;   // mean((v - truth)^2) / truth^2
    double normalized_bias = 0.0;  // (mean - truth) / truth
    double median_abs_error = 0.0;  // median |v - truth|, unnormalized
    std::array<double, 7> percentiles{};  // of raw per-trial values
};

// Runs config.trials independent projections of config.vector and feeds each
// through the chosen estimator (and, in Entropy mode, through the entropy
// proxy). Per-trial failures are counted in `errors`, never dropped
// silently; if every trial fails the harness throws numeric_error. The
// symmetric estimator's calibration constant is computed once per run from
// a key derived from base_seed. Identical configs produce bit-identical
// reports.
MCReport run_mc(const MCConfig& config);

}  // namespace oracle
}  // namespace cc
