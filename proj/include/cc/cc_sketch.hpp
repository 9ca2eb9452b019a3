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
#include <iosfwd>
#include <string>
#include <vector>

#include "cc/sparse_vector.hpp"
#include "cc/stable_sampler.hpp"

namespace cc {
namespace sketch {

// One turnstile update: coordinate `index` changes by `amount` (positive
// insertion or negative deletion).
struct StreamUpdate {
    std::uint64_t index = 0;
    double amount = 0.0;
};

// The k-dimensional projection X = A x R of a turnstile stream, where R's
// entries r_ij are stable draws fully determined by (seed, i, j), plus an
// exact running first-moment counter f1 = sum of all applied amounts.
// Sketches over the same (k, params, seed, d) are linear: updates commute
// and sketches of disjoint streams merge by addition.
//
// Single writer per instance; reads (x(), f1(), merge sources, estimation)
// are safe once no writer is active.
class CCSketch {
 public:
    // k >= 1 projections over domain size d >= 1. The projection law is
    // params.skew: maximally skewed entries for moment estimation, symmetric
    // entries for the baseline estimator.
    CCSketch(std::size_t k, stable::StableParams params, std::uint64_t seed,
             std::uint64_t d);

    void update(const StreamUpdate& u) { update(u.index, u.amount); }
    void update(std::uint64_t index, double amount);

    // Folds a read-time snapshot through update(), entry by entry, so the
    // batch path is bit-identical to streaming the same entries in order.
    // Values must be nonnegative (read-time model check).
    static CCSketch project_dense(const SparseVector& v, std::size_t k,
                                  stable::StableParams params, std::uint64_t seed);

    // Componentwise sum of x and f1. Requires identical (k, params, seed, d).
    static CCSketch merge(const CCSketch& a, const CCSketch& b);

    // Compensated (Kahan) accumulation for x and f1; off by default since
    // the projection entries are O(1) and plain sums lose nothing measurable.
    // Not part of the serialized state.
    void enable_compensated_accumulation(bool on);

    const std::vector<double>& x() const { return x_; }
    double f1() const { return f1_ + f1_comp_; }
    std::size_t k() const { return x_.size(); }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t domain_size() const { return d_; }
    const stable::StableParams& params() const { return params_; }

    // Versioned little-endian binary layout (documented in README):
    //   magic "CCSK" | u16 version=1 | u8 skew | u8 reserved |
    //   u64 k | f64 alpha | f64 delta | u64 seed | u64 d | f64 f1 | f64 x[k]
    // Round-trips bit-exactly. load() throws input_error on bad magic,
    // unsupported version, or truncated data.
    void save(std::ostream& os) const;
    static CCSketch load(std::istream& is);
    void save_file(const std::string& path) const;
    static CCSketch load_file(const std::string& path);

 private:
    stable::StableParams params_;
    std::uint64_t seed_ = 0;
    std::uint64_t d_ = 0;
    std::vector<double> x_;
    std::vector<double> x_comp_;   // Kahan compensations (when enabled)
    double f1_ = 0.0;
    double f1_comp_ = 0.0;
    bool kahan_ = false;
    std::vector<double> scratch_;  // per-update draw buffer, k log-draws + k values
};

}  // namespace sketch
}  // namespace cc
