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

#include <cstddef>
#include <cstdint>

namespace cc::kern {

// Throughput tier: batch transcendental kernels used by the sampling and
// sketch-update hot loops. A scalar reference backend and an AVX2 backend
// share one op-for-op implementation, so their outputs are bitwise equal;
// the active backend is picked once at startup from CPU capabilities and
// may be overridden with the environment variable CC_KERNEL=auto|scalar|avx2.
//
// Everything precision-critical elsewhere (quadrature, tail-bound solving,
// estimator reductions) uses the standard library math tier instead.

enum class Backend { Scalar, Avx2 };

Backend
active_backend() noexcept;

const char*
backend_name(Backend b) noexcept;

// y[t] = exp(x[t]); finite inputs, |x| > 708 clamps to the boundary value.
void
vexp(const double* x, double* y, std::size_t n) noexcept;

// y[t] = log(x[t]); positive normal inputs.
void
vlog(const double* x, double* y, std::size_t n) noexcept;

// logz[t] = log of the maximally-skewed standard stable draw for matrix
// cell (i, j0+t) under `seed`, for t in [0, n).
void
vlogz(std::uint64_t seed, std::uint64_t i, std::uint64_t j0, double alpha,
      double* logz, std::size_t n) noexcept;

// s[t] = signed symmetric standard stable draw for cell (i, j0+t).
void
vsym(std::uint64_t seed, std::uint64_t i, std::uint64_t j0, double alpha,
     double* s, std::size_t n) noexcept;

// x[t] += amount * z[t], fused per element.
void
vaxpy(double amount, const double* z, double* x, std::size_t n) noexcept;

// Scalar single-shot versions of the element functions (reference tier of
// the same op chain; handy for tests and one-off evaluations).
double
fast_exp(double x) noexcept;
double
fast_log(double x) noexcept;
double
fast_log1p(double z) noexcept;
double
fast_sin_pi(double x) noexcept;

namespace detail {

// Backend-explicit entry points (tests compare these bitwise).
void
vexp_backend(Backend b, const double* x, double* y, std::size_t n) noexcept;
void
vlog_backend(Backend b, const double* x, double* y, std::size_t n) noexcept;
void
vlogz_backend(Backend b, std::uint64_t seed, std::uint64_t i,
              std::uint64_t j0, double alpha, double* logz,
              std::size_t n) noexcept;
void
vsym_backend(Backend b, std::uint64_t seed, std::uint64_t i, std::uint64_t j0,
             double alpha, double* s, std::size_t n) noexcept;
void
vaxpy_backend(Backend b, double amount, const double* z, double* x,
              std::size_t n) noexcept;

bool
cpu_has_avx2() noexcept;

}  // namespace detail

}  // namespace cc::kern
