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

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "cc/errors.hpp"

// One-dimensional quadrature and root finding used by the distribution and
// tail-bound code. Everything here runs on libm, not the vector kernels:
// these paths trade speed for the tightest achievable accuracy.

namespace cc::quad {

namespace detail {

template <class F>
double
simpson_recurse(const F& f, double a, double fa, double m, double fm, double b,
                double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h6 = (b - a) / 12.0;
    const double left = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double split = left + right;
    if (depth <= 0 || std::fabs(split - whole) <= 15.0 * tol) {
        // Richardson correction: one extrapolation order beyond Simpson.
        return split + (split - whole) / 15.0;
    }
    return simpson_recurse(f, a, fa, lm, flm, m, fm, left, 0.5 * tol,
                           depth - 1) +
           simpson_recurse(f, m, fm, rm, frm, b, fb, right, 0.5 * tol,
                           depth - 1);
}

}  // namespace detail

// Adaptive Simpson integration of f over [a, b] to absolute tolerance
// abs_tol. The integrand is evaluated at panel endpoints, so it must be
// finite on the closed interval.
template <class F>
double
adaptive_simpson(const F& f, double a, double b, double abs_tol) {
    if (!(b > a)) {
        return 0.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_recurse(f, a, fa, m, fm, b, fb, whole, abs_tol, 60);
}

// Integrate f over the union of panels defined by an ascending knot list,
// splitting the absolute tolerance evenly across panels.
template <class F>
double
integrate_panels(const F& f, const std::vector<double>& knots,
                 double abs_tol) {
    if (knots.size() < 2) {
        return 0.0;
    }
    const double per_panel = abs_tol / static_cast<double>(knots.size() - 1);
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < knots.size(); ++p) {
        total += adaptive_simpson(f, knots[p], knots[p + 1], per_panel);
    }
    return total;
}

// Brent's method on [a, b]. Requires f(a) and f(b) of opposite sign (zero
// at an endpoint is accepted); throws numeric_error otherwise or when the
// iteration fails to converge.
template <class F>
double
brent_root(const F& f, double a, double b, double xtol = 1e-15,
           int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) {
        return a;
    }
    if (fb == 0.0) {
        return b;
    }
    if ((fa > 0.0) == (fb > 0.0)) {
        throw numeric_error("brent_root: endpoints do not bracket a root");
    }
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 =
            2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) +
            0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) {
            return b;
        }
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            }
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::fabs(d) > tol1) {
            b += d;
        } else {
            b += (xm > 0.0 ? tol1 : -tol1);
        }
        fb = f(b);
    }
    throw numeric_error("brent_root: no convergence");
}

// Knot list for integrals over theta in (0, pi) against the exponent
// function of the maximally-skewed family. The fixed knots track where the
// integrand's curvature concentrates as theta approaches pi; when
// spike_hint > 0 additional knots at spike_hint * {0.1, 0.3, 1, 3, 10}
// resolve an integrand that localizes near theta = 0 on that scale.
std::vector<double>
theta_panels(double delta, double spike_hint = 0.0);

}  // namespace cc::quad
