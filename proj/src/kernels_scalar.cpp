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

#include <vector>

#include "cc/detail/kernel_body.hpp"
#include "cc/kernels.hpp"

namespace cc::kern {

using detail::Kern;
using detail::ScalarOps;
using K = Kern<ScalarOps>;

double
fast_exp(double x) noexcept {
    return K::exp_v(x);
}

double
fast_log(double x) noexcept {
    return K::log_v(x);
}

double
fast_log1p(double z) noexcept {
    return K::log1p_v(z);
}

double
fast_sin_pi(double x) noexcept {
    return K::sin_pi_v(x);
}

namespace detail {

void
vexp_scalar(const double* x, double* y, std::size_t n) noexcept {
    for (std::size_t t = 0; t < n; ++t) {
        y[t] = K::exp_v(x[t]);
    }
}

void
vlog_scalar(const double* x, double* y, std::size_t n) noexcept {
    for (std::size_t t = 0; t < n; ++t) {
        y[t] = K::log_v(x[t]);
    }
}

void
vlogz_scalar(std::uint64_t seed, std::uint64_t i, std::uint64_t j0,
             double alpha, double* logz, std::size_t n) noexcept {
    const double delta = 1.0 - alpha;
    for (std::size_t t = 0; t < n; ++t) {
        const std::uint64_t key = rng::derive_key(seed, i, j0 + t);
        const double u1 = rng::u53_open(rng::key_word(key, 0));
        const double u2 = rng::u53_open(rng::key_word(key, 1));
        logz[t] = K::logz_v(u1, u2, alpha, delta);
    }
}

void
vsym_scalar(std::uint64_t seed, std::uint64_t i, std::uint64_t j0,
            double alpha, double* s, std::size_t n) noexcept {
    const double delta = 1.0 - alpha;
    for (std::size_t t = 0; t < n; ++t) {
        const std::uint64_t key = rng::derive_key(seed, i, j0 + t);
        const double u1 = rng::u53_open(rng::key_word(key, 0));
        const double u2 = rng::u53_open(rng::key_word(key, 1));
        s[t] = K::sym_v(u1, u2, alpha, delta);
    }
}

void
vaxpy_scalar(double amount, const double* z, double* x,
             std::size_t n) noexcept {
    for (std::size_t t = 0; t < n; ++t) {
        x[t] = std::fma(amount, z[t], x[t]);
    }
}

}  // namespace detail

}  // namespace cc::kern
