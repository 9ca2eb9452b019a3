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

#include "cc/quadrature.hpp"

#include <algorithm>
#include <numbers>

namespace cc::quad {

std::vector<double>
theta_panels(double delta, double spike_hint) {
    (void)delta;
    constexpr double kPi = std::numbers::pi;
    // Fixed knots: dense near pi where the exponent function blows up, a few
    // panels through the midrange, and a pair of panels near zero so a mild
    // left-edge feature never straddles a single giant panel.
    std::vector<double> knots = {0.0,  1e-5, 1e-3, 0.03, 0.2,   0.7,
                                 1.5,  2.4,  2.9,  3.08, 3.135, kPi};
    if (spike_hint > 0.0) {
        for (double c : {0.1, 0.3, 1.0, 3.0, 10.0}) {
            const double t = spike_hint * c;
            if (t > 1e-12 && t < kPi - 1e-12) {
                knots.push_back(t);
            }
        }
        std::sort(knots.begin(), knots.end());
    }
    // Drop near-duplicates so adaptive panels never collapse to zero width.
    std::vector<double> out;
    out.reserve(knots.size());
    for (double t : knots) {
        if (out.empty() || t - out.back() > 1e-14) {
            out.push_back(t);
        }
    }
    if (out.back() != kPi) {
        out.back() = kPi;
    }
    return out;
}

}  // namespace cc::quad
