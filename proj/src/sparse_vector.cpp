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

#include "cc/sparse_vector.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "cc/errors.hpp"

namespace cc {

void validate_sparse_vector(const SparseVector& v) {
    if (v.d == 0) throw input_error("sparse vector has domain size 0");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(v.entries.size());
    for (const auto& e : v.entries) {
        if (e.index >= v.d) {
            throw input_error("index " + std::to_string(e.index) +
                              " out of range for domain size " + std::to_string(v.d));
        }
        if (!seen.insert(e.index).second) {
            throw input_error("duplicate index " + std::to_string(e.index));
        }
        if (!(e.value >= 0.0) || !std::isfinite(e.value)) {
            throw model_violation("value at index " + std::to_string(e.index) +
                                  " is negative or non-finite: " +
                                  std::to_string(e.value));
        }
    }
}

SparseVector make_zipf(std::uint64_t n, double s, std::uint64_t d) {
    if (n == 0 || d == 0 || n > d) {
        throw config_error("make_zipf needs 0 < n <= d");
    }
    if (!std::isfinite(s)) throw config_error("make_zipf: s must be finite");
    SparseVector v;
    v.d = d;
    v.entries.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        v.entries.push_back(
            {i, std::exp(-s * std::log(static_cast<double>(i + 1)))});
    }
    return v;
}

}  // namespace cc
