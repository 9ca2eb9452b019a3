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

#include <string>

#include "cc/cc_sketch.hpp"
#include "cc/estimators.hpp"

namespace cc {
namespace ent {

enum class EntropyKind { Renyi, Tsallis };

// Which published rule picks delta from the desired additive entropy
// accuracy nu and the stream dimensions.
enum class DeltaVariant { ITW08, FOCS08 };

struct EntropyEstimate {
    double shannon_proxy = 0.0;  // in the requested log base
    EntropyKind kind = EntropyKind::Renyi;
    double alpha_used = 0.0;
    est::Estimator moment_source = est::Estimator::NewInversePower;
    // Non-fatal note, e.g. when the estimate strays outside [0, log d]
    // (noisy unbiased estimators legitimately do) or the moment estimator
    // reported a stability warning. Empty when clean.
    std::string diagnostic;
};

// Entropy of order alpha from a frequency moment f_alpha and first moment f1:
//   (1/(1-alpha)) * log(f_alpha / f1^alpha) / log(base)
// Requires f_alpha, f1 > 0 and alpha != 1 (degenerate order).
double renyi(double f_alpha, double f1, double alpha,
             double base = 2.718281828459045235360287471352662498);

// Tsallis entropy of order alpha, natural units:
//   (1/(1-alpha)) * (f_alpha / f1^alpha - 1)
// evaluated via expm1 so the alpha -> 1 cancellation keeps full precision.
double tsallis(double f_alpha, double f1, double alpha);

// Shannon-entropy proxy from a sketch: estimates f_alpha with the chosen
// estimator (exact f1 comes from the sketch's counter), then applies the
// Renyi or Tsallis formula at the sketch's alpha. Requires delta <= 0.2 so
// the proxy is meaningfully close to Shannon entropy. The Tsallis proxy is
// divided by log(base) so both paths land in the requested unit as
// alpha -> 1. SymmetricGM needs `calibration` from calibrate_symmetric_gm.
EntropyEstimate shannon_from_sketch(const sketch::CCSketch& s,
                                    est::Estimator method, EntropyKind via,
                                    double base = 2.0, double calibration = 0.0);

// Pick delta for an additive entropy target nu over a domain of size d and
// a stream of length m (both passed as reals so 2^64-scale sizes fit).
//   ITW08:  delta = c / (16 log(1/c)) with c = nu / (4 log d log m)
//   FOCS08: delta = C nu (log m)^(-gamma), the improved power law fitted to
//           its two published example points (d plays no role).
double choose_delta(double d, double m, double nu, DeltaVariant variant);

}  // namespace ent
}  // namespace cc
