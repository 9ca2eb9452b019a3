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

namespace cc::rng {

// Counter-based generator: every random quantity is a pure function of
// (seed, i, j). There is no sequential state, so projection entries can be
// regenerated on demand in any order, which is what makes the streaming and
// batch sketch paths bit-identical.
//
// The mixer is the splitmix64 finalizer (three xor-shift-multiply rounds);
// keys are chained through it with distinct odd offsets per level so that
// (seed, i, j) and (seed, i', j') collide only if the 64-bit states collide.

inline constexpr std::uint64_t kGamma1 = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kGamma2 = 0xBF58476D1CE4E5B9ULL;
inline constexpr std::uint64_t kGamma3 = 0x94D049BB133111EBULL;

constexpr std::uint64_t
mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// One 64-bit key per (seed, i, j) cell of the implicit projection matrix.
constexpr std::uint64_t
derive_key(std::uint64_t seed, std::uint64_t i, std::uint64_t j) noexcept {
    std::uint64_t h = mix64(seed + kGamma1);
    h = mix64(h ^ (i + kGamma2));
    h = mix64(h ^ (j + kGamma3));
    return h;
}

// n-th word of the splitmix64 stream rooted at `key`.
constexpr std::uint64_t
key_word(std::uint64_t key, std::uint64_t n) noexcept {
    return mix64(key + (n + 1) * kGamma1);
}

// Uniform on the open interval (0, 1): the top 52 bits are centered into
// the cell midpoints ((w >> 12) + 0.5) / 2^52. Every product is exact in
// double precision, so the result can be neither endpoint, branch-free:
// the range is [2^-53, 1 - 2^-53]. (A 53-bit midpoint scheme would round
// its top cell to exactly 1.0 under round-to-nearest-even.)
constexpr double
u53_open(std::uint64_t w) noexcept {
    return (static_cast<double>(w >> 12) + 0.5) * 0x1p-52;
}

}  // namespace cc::rng
