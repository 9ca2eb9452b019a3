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
#include <vector>

namespace cc {

// A nonnegative signal over a domain of size d, stored sparsely. This is the
// read-time snapshot of a turnstile stream: indices must be unique and < d,
// values must be >= 0 (the strict nonnegativity is asserted at read time
// only; intermediate stream states may dip negative).
struct SparseVector {
    struct Entry {
        std::uint64_t index = 0;
        double value = 0.0;
    };
    std::vector<Entry> entries;
    std::uint64_t d = 0;
};

// Throws input_error on duplicate/out-of-range indices or d == 0, and
// model_violation on negative or non-finite values.
void validate_sparse_vector(const SparseVector& v);

// First n coordinates carry (i+1)^(-s), the rest zero; the workhorse
// synthetic profile for tests and experiments.
SparseVector make_zipf(std::uint64_t n, double s, std::uint64_t d);

}  // namespace cc
