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

namespace cc::kern::detail {

// Polynomial coefficients for the throughput-tier transcendentals, frozen
// from offline Chebyshev-node fits carried out in 45-digit arithmetic and
// rounded to the nearest double. Measured worst-case relative error of the
// double-precision Horner evaluation over a dense grid of the fit interval:
//   exp core  1.6e-16,  log core  1.2e-16,  sin core  2.3e-16.

// e^r on [-ln2/2, ln2/2], degree 11, ascending powers.
inline constexpr double kExpC[12] = {
    0x1.0000000000000p+0,  0x1.0000000000000p+0,  0x1.0000000000011p-1,
    0x1.555555555555ap-3,  0x1.555555554f0cfp-5,  0x1.111111110f225p-7,
    0x1.6c16c187fbe02p-10, 0x1.a01a01b14378fp-13, 0x1.a01991ac8730ap-16,
    0x1.71ddf5749d126p-19, 0x1.28b4057f44145p-22, 0x1.af631d0059becp-26,
};

// R(u) = 2*atanh(sqrt(u))/sqrt(u) on [0, ((sqrt2-1)/(sqrt2+1))^2], degree 8,
// ascending powers; log m = s * R(s^2) with s = (m-1)/(m+1).
inline constexpr double kLogR[9] = {
    0x1.0000000000000p+1, 0x1.5555555555555p-1, 0x1.9999999999ee0p-2,
    0x1.249249241f854p-2, 0x1.c71c72635920bp-3, 0x1.745cdb9efb381p-3,
    0x1.3b2109cf333acp-3, 0x1.0f55ac8f9429ap-3, 0x1.0f9ba0645d937p-3,
};

// P(u) = sin(sqrt(u))/sqrt(u) on [0, (pi/2)^2], degree 10, ascending powers;
// sin t = t * P(t^2) on [-pi/2, pi/2].
inline constexpr double kSinP[11] = {
    0x1.0000000000000p+0,   -0x1.5555555555555p-3, 0x1.1111111111111p-7,
    -0x1.a01a01a01a01ap-13, 0x1.71de3a556c717p-19, -0x1.ae64567f529c8p-26,
    0x1.6124613987025p-33,  -0x1.ae7f3db16709bp-41, 0x1.952c18a0dcb74p-49,
    -0x1.2f2d24a8e2e65p-57, 0x1.67eed7e3fa389p-66,
};

inline constexpr double kInvLn2 = 0x1.71547652b82fep+0;
inline constexpr double kLn2Hi = 0x1.62e4000000000p-1;   // 21 significant bits
inline constexpr double kLn2Lo = 0x1.7f7d1cf79abcap-20;  // ln2 - kLn2Hi
inline constexpr double kMagic = 0x1.8p52;               // 1.5 * 2^52
inline constexpr double kExpClamp = 708.0;

inline constexpr double kSqrtHalf = 0x1.6a09e667f3bcdp-1;

inline constexpr double kPiHi = 0x1.921fb54442d18p+1;
inline constexpr double kPiLo = 0x1.1a62633145c07p-53;  // pi - kPiHi
inline constexpr double kPi2Hi = 0x1.921fb54442d18p+0;
inline constexpr double kPi2Lo = 0x1.1a62633145c07p-54;  // pi/2 - kPi2Hi
inline constexpr double kHalfPi = 1.5707963267948966;

}  // namespace cc::kern::detail
