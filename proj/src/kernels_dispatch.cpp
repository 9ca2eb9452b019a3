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

#include "cc/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace cc::kern {

namespace detail {

// Entry points defined in kernels_scalar.cpp.
void
vexp_scalar(const double* x, double* y, std::size_t n) noexcept;
void
vlog_scalar(const double* x, double* y, std::size_t n) noexcept;
void
vlogz_scalar(std::uint64_t seed, std::uint64_t i, std::uint64_t j0,
             double alpha, double* logz, std::size_t n) noexcept;
void
vsym_scalar(std::uint64_t seed, std::uint64_t i, std::uint64_t j0,
            double alpha, double* s, std::size_t n) noexcept;
void
vaxpy_scalar(double amount, const double* z, double* x,
             std::size_t n) noexcept;

// Entry points defined in kernels_avx2.cpp.
void
vexp_avx2(const double* x, double* y, std::size_t n) noexcept;
void
vlog_avx2(const double* x, double* y, std::size_t n) noexcept;
void
vlogz_avx2(std::uint64_t seed, std::uint64_t i, std::uint64_t j0, double alpha,
           double* logz, std::size_t n) noexcept;
void
vsym_avx2(std::uint64_t seed, std::uint64_t i, std::uint64_t j0, double alpha,
          double* s, std::size_t n) noexcept;
void
vaxpy_avx2(double amount, const double* z, double* x, std::size_t n) noexcept;

bool
cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Backend
resolve_backend() noexcept {
    const bool have_avx2 = cpu_has_avx2();
    const char* env = std::getenv("CC_KERNEL");
    if (env != nullptr && *env != '\0') {
        if (std::strcmp(env, "scalar") == 0) {
            return Backend::Scalar;
        }
        if (std::strcmp(env, "avx2") == 0) {
            if (have_avx2) {
                return Backend::Avx2;
            }
            std::fprintf(stderr,
                         "ccsketch: CC_KERNEL=avx2 requested but the CPU "
                         "lacks AVX2+FMA; using the scalar backend\n");
            return Backend::Scalar;
        }
        if (std::strcmp(env, "auto") != 0) {
            std::fprintf(stderr,
                         "ccsketch: unrecognized CC_KERNEL value '%s' "
                         "(expected auto|scalar|avx2); using auto\n",
                         env);
        }
    }
    return have_avx2 ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

void
vexp_backend(Backend b, const double* x, double* y, std::size_t n) noexcept {
    if (b == Backend::Avx2) {
        vexp_avx2(x, y, n);
    } else {
        vexp_scalar(x, y, n);
    }
}

void
vlog_backend(Backend b, const double* x, double* y, std::size_t n) noexcept {
    if (b == Backend::Avx2) {
        vlog_avx2(x, y, n);
    } else {
        vlog_scalar(x, y, n);
    }
}

void
vlogz_backend(Backend b, std::uint64_t seed, std::uint64_t i,
              std::uint64_t j0, double alpha, double* logz,
              std::size_t n) noexcept {
    if (b == Backend::Avx2) {
        vlogz_avx2(seed, i, j0, alpha, logz, n);
    } else {
        vlogz_scalar(seed, i, j0, alpha, logz, n);
    }
}

void
vsym_backend(Backend b, std::uint64_t seed, std::uint64_t i, std::uint64_t j0,
             double alpha, double* s, std::size_t n) noexcept {
    if (b == Backend::Avx2) {
        vsym_avx2(seed, i, j0, alpha, s, n);
    } else {
        vsym_scalar(seed, i, j0, alpha, s, n);
    }
}

void
vaxpy_backend(Backend b, double amount, const double* z, double* x,
              std::size_t n) noexcept {
    if (b == Backend::Avx2) {
        vaxpy_avx2(amount, z, x, n);
    } else {
        vaxpy_scalar(amount, z, x, n);
    }
}

}  // namespace detail

Backend
active_backend() noexcept {
    static const Backend kActive = detail::resolve_backend();
    return kActive;
}

const char*
backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar:
            return "scalar";
        case Backend::Avx2:
            return "avx2";
    }
    return "unknown";
}

void
vexp(const double* x, double* y, std::size_t n) noexcept {
    detail::vexp_backend(active_backend(), x, y, n);
}

void
vlog(const double* x, double* y, std::size_t n) noexcept {
    detail::vlog_backend(active_backend(), x, y, n);
}

void
vlogz(std::uint64_t seed, std::uint64_t i, std::uint64_t j0, double alpha,
      double* logz, std::size_t n) noexcept {
    detail::vlogz_backend(active_backend(), seed, i, j0, alpha, logz, n);
}

void
vsym(std::uint64_t seed, std::uint64_t i, std::uint64_t j0, double alpha,
     double* s, std::size_t n) noexcept {
    detail::vsym_backend(active_backend(), seed, i, j0, alpha, s, n);
}

void
vaxpy(double amount, const double* z, double* x, std::size_t n) noexcept {
    detail::vaxpy_backend(active_backend(), amount, z, x, n);
}

}  // namespace cc::kern
