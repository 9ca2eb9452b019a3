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

#include "cc/tail_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cc/errors.hpp"
#include "cc/quadrature.hpp"
#include "cc/stable_dist.hpp"

namespace cc {
namespace tail {

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

void check_delta_unit(double delta, const char* who) {
    if (!(delta > 0.0) || !(delta <= 1.0)) {
        throw config_error(std::string(who) + ": delta must lie in (0, 1]");
    }
}

// log g(0+) = log delta + (alpha/delta) log alpha; the alpha -> 0 endpoint
// (delta = 1) contributes nothing from the vanishing weight.
double log_g0(double delta) {
    const double alpha = 1.0 - delta;
    if (alpha <= 0.0) return std::log(delta);
    return std::log(delta) + (alpha / delta) * std::log(alpha);
}

double pn_unchecked(std::int64_t n, double delta) {
    // Ascending j keeps every partial product in [e^-n, 1]: no overflow for
    // the n <= 500 the series ever uses.
    double p = 1.0;
    const auto nd = static_cast<double>(n);
    for (std::int64_t j = 0; j < n; ++j) {
        const auto jd = static_cast<double>(j);
        p *= (nd - jd * delta) / ((nd - jd) * kE);
    }
    return p;
}

// ---- integral-form MGFs -------------------------------------------------
//
// E e^{-T y}   = (1/pi) Int 1/(1 + T e^{-log g}) dtheta
// E y e^{-T y} = (1/pi) Int e^{-log g}/(1 + T e^{-log g})^2 dtheta
// and for the + sign with T = g(0+)(1 - eta), the denominators use
// 1 - T e^{-log g} = -expm1(-(log g - log g0)) + eta e^{-(log g - log g0)},
// which is exact where the direct form would cancel catastrophically.

template <class F>
double integrate_rel(const F& f, const std::vector<double>& knots) {
    double scale = 0.0;
    for (const double k : knots) scale = std::max(scale, std::fabs(f(k)));
    const double span = knots.back() - knots.front();
    const double tol = 1e-13 * std::max(scale * span, 1e-300);
    return quad::integrate_panels(f, knots, tol);
}

struct MinusMgf {
    double phi = 0.0;  // E e^{-Ty}
    double m1 = 0.0;   // E y e^{-Ty}
};

MinusMgf mgf_minus(double t, double delta, double lg0,
                   const std::vector<double>& knots) {
    const auto lg_at = [&](double th) {
        return th == 0.0 ? lg0 : stable::detail::log_g(th, delta);
    };
    MinusMgf out;
    out.phi = integrate_rel(
                  [&](double th) { return 1.0 / (1.0 + t * std::exp(-lg_at(th))); },
                  knots) /
              std::numbers::pi;
    out.m1 = integrate_rel(
                 [&](double th) {
                     const double q = std::exp(-lg_at(th));
                     const double u = 1.0 + t * q;
                     return q / (u * u);
                 },
                 knots) /
             std::numbers::pi;
    return out;
}

struct PlusMgf {
    double phi = 0.0;  // E e^{+Ty}, T = g0 (1 - eta)
    double m1 = 0.0;   // E y e^{+Ty}
};

PlusMgf mgf_plus(double eta, double delta, double lg0) {
    const auto knots =
        quad::theta_panels(delta, std::sqrt(2.0 * std::min(eta, 1.0)));
    const auto den_at = [&](double th) {
        const double dlg = th == 0.0 ? 0.0 : stable::detail::log_g(th, delta) - lg0;
        const double e = std::exp(-dlg);
        return -std::expm1(-dlg) + eta * e;  // = 1 - (1-eta) g0/g(theta)
    };
    PlusMgf out;
    out.phi = integrate_rel([&](double th) { return 1.0 / den_at(th); }, knots) /
              std::numbers::pi;
    out.m1 = integrate_rel(
                 [&](double th) {
                     const double lg = th == 0.0 ? lg0
                                                 : stable::detail::log_g(th, delta);
                     const double den = den_at(th);
                     return std::exp(-lg) / (den * den);
                 },
                 knots) /
             std::numbers::pi;
    return out;
}

}  // namespace

double product_term(std::int64_t n, double delta) {
    if (n < 1) throw config_error("product_term needs n >= 1");
    check_delta_unit(delta, "product_term");
    return pn_unchecked(n, delta);
}

SeriesEval series_value(double s, double delta, SeriesSign sign) {
    if (!(s > 0.0) || !(s < 1.0)) {
        throw config_error("series_value needs s in (0, 1)");
    }
    check_delta_unit(delta, "series_value");
    const double sg = sign == SeriesSign::Alternating ? -1.0 : 1.0;
    SeriesEval out{1.0, 0.0};
    double sign_n = 1.0;
    double spow = 1.0;  // s^(n-1)
    for (std::int64_t n = 1; n <= 500; ++n) {
        sign_n *= sg;
        const double p = pn_unchecked(n, delta);
        const double term = sign_n * spow * s * p;
        const double dterm = sign_n * static_cast<double>(n) * spow * p;
        out.value += term;
        out.derivative += dterm;
        spow *= s;
        if (std::fabs(term) < 1e-15 * std::fabs(out.value) &&
            std::fabs(dterm) < 1e-15 * std::fabs(out.derivative)) {
            return out;
        }
    }
    throw numeric_error("MGF series did not converge within 500 terms at s = " +
                        std::to_string(s) + ", delta = " + std::to_string(delta));
}

TailBoundResult solve_tail(Tail tail, double epsilon, double delta) {
    check_delta_unit(delta, "solve_tail");
    if (tail == Tail::Right) {
        if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
            throw config_error("right tail needs epsilon > 0");
        }
    } else {
        if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
            throw config_error("left tail needs epsilon in (0, 1)");
        }
    }

    const double lg0 = log_g0(delta);
    const double g0 = std::exp(lg0);
    const double rho = std::exp(1.0 + lg0 - std::log(delta));  // g0 e / delta

    // Stationarity target in delta-normalized form:
    //   R = (1 +- epsilon)^(-1/delta) = exp(r_log), full target a = R/delta.
    const double r_log =
        (tail == Tail::Right ? -std::log1p(epsilon) : -std::log1p(-epsilon)) /
        delta;
    if (r_log - std::log(delta) > 700.0) {
        throw numeric_error(
            "left-tail target (1-epsilon)^(-1/delta) exceeds double range; "
            "epsilon is far outside the epsilon = O(delta) regime");
    }
    const double r_target = std::exp(r_log);
    const double a_target = std::exp(r_log - std::log(delta));
    const double sign = tail == Tail::Right ? -1.0 : 1.0;
    const SeriesSign series_sign =
        tail == Tail::Right ? SeriesSign::Alternating : SeriesSign::Positive;

    TailBoundResult out;
    out.tail = tail;
    out.epsilon = epsilon;
    out.delta_param = delta;

    // ---- series path: normalized ratio sign*e*M'(s)/M(s) against R (the
    // alternating series has M' < 0, so the right tail's ratio is positive).
    // h is monotone (decreasing for the right tail, increasing for the left),
    // so a sign change over the bracket pins the unique stationary point.
    const auto h_series = [&](double s) {
        const SeriesEval ev = series_value(s, delta, series_sign);
        return sign * kE * ev.derivative / ev.value - r_target;
    };
    const double s_lo = 1e-8;
    // Keep a margin below the convergence radius so 500 terms always reach
    // the 1e-15 truncation: beyond it, fall through to the integral form.
    const double s_hi = std::min(1.0 - 1e-8, 0.90 * rho);
    bool series_done = false;
    if (s_hi > s_lo) {
        try {
            const double h_lo = h_series(s_lo);
            const double h_hi = h_series(s_hi);
            if ((h_lo > 0.0 && h_hi < 0.0) || (h_lo < 0.0 && h_hi > 0.0)) {
                const double s_star = quad::brent_root(h_series, s_lo, s_hi, 1e-16, 300);
                const double residual = std::fabs(h_series(s_star));
                if (residual > 1e-12 * std::max(1.0, r_target)) {
                    throw numeric_error(
                        "tail-bound stationarity residual " +
                        std::to_string(residual) + " exceeds 1e-12");
                }
                const double m = series_value(s_star, delta, series_sign).value;
                out.t_star = s_star * delta / kE;
                out.exponent = -std::log(m) + sign * (s_star / kE) * r_target;
                series_done = true;
            }
        } catch (const numeric_error&) {
            series_done = false;  // series unusable here; integral path below
        }
    }

    if (!series_done && tail == Tail::Right) {
        // Solve in u = log T so the bracket and tolerance are scale-free.
        const auto knots = quad::theta_panels(delta, 0.0);
        const auto h_int = [&](double u) {
            const MinusMgf m = mgf_minus(std::exp(u), delta, lg0, knots);
            return m.m1 / m.phi - a_target;
        };
        double u_lo = lg0 + std::log(1e-9);
        double u_hi = lg0;
        int guard = 0;
        while (h_int(u_lo) < 0.0) {
            u_lo -= 13.8;  // expand downward by 1e6 steps
            if (++guard > 50) throw numeric_error("right-tail bracket failed (low)");
        }
        guard = 0;
        while (h_int(u_hi) > 0.0) {
            u_hi += 1.3862943611198906;  // expand T by 4x
            if (u_hi > 700.0 || ++guard > 1200) {
                throw numeric_error("right-tail bracket failed (high)");
            }
        }
        const double u_star = quad::brent_root(h_int, u_lo, u_hi, 1e-15, 300);
        const double residual = delta * std::fabs(h_int(u_star));
        if (residual > 1e-12 * std::max(1.0, r_target)) {
            throw numeric_error("tail-bound stationarity residual " +
                                std::to_string(residual) + " exceeds 1e-12");
        }
        const double t_star = std::exp(u_star);
        const MinusMgf m = mgf_minus(t_star, delta, lg0, knots);
        out.t_star = t_star;
        out.exponent = -std::log(m.phi) - t_star * a_target;
    } else if (!series_done) {
        // Left tail: solve in u = log eta with T = g0 (1 - eta); the ratio
        // grows without bound as eta -> 0, so expansion always brackets.
        const auto h_int = [&](double u) {
            const PlusMgf m = mgf_plus(std::exp(u), delta, lg0);
            return m.m1 / m.phi - a_target;
        };
        double u_hi = std::log1p(-1e-12);  // eta ~ 1, T ~ 0, ratio ~ E y
        double u_lo = std::log(0.4);
        if (h_int(u_hi) > 0.0) {
            throw numeric_error("left-tail ratio exceeds target at T -> 0");
        }
        int guard = 0;
        while (h_int(u_lo) < 0.0) {
            u_hi = u_lo;
            u_lo += std::log(0.5);
            if (++guard > 200) throw numeric_error("left-tail bracket failed");
        }
        const double u_star = quad::brent_root(h_int, u_lo, u_hi, 1e-15, 300);
        const double residual = delta * std::fabs(h_int(u_star));
        if (residual > 1e-12 * std::max(1.0, r_target)) {
            throw numeric_error("tail-bound stationarity residual " +
                                std::to_string(residual) + " exceeds 1e-12");
        }
        const double eta_star = std::exp(u_star);
        const double t_star = g0 * (1.0 - eta_star);
        const PlusMgf m = mgf_plus(eta_star, delta, lg0);
        out.t_star = t_star;
        out.exponent = -std::log(m.phi) + t_star * a_target;
    }

    if (!(out.exponent > 0.0) || !std::isfinite(out.exponent)) {
        throw numeric_error("tail-bound exponent came out non-positive");
    }
    const double nu = epsilon / delta;
    out.g_over_delta_sq = nu * nu / out.exponent;
    return out;
}

double closed_form_delta1(Tail tail, double epsilon) {
    if (tail == Tail::Right) {
        if (!(epsilon > 0.0)) throw config_error("right tail needs epsilon > 0");
        return std::log1p(epsilon) - epsilon / (1.0 + epsilon);
    }
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw config_error("left tail needs epsilon in (0, 1)");
    }
    return std::log1p(-epsilon) + epsilon / (1.0 - epsilon);
}

double asymptotic_g(double delta) {
    check_delta_unit(delta, "asymptotic_g");
    return 6.0 - 4.0 * delta;
}

std::int64_t sample_size(double nu, double fail_prob, SampleRegime regime) {
    if (!(nu > 0.0) || !(nu < 1.0)) {
        throw config_error("sample_size needs nu in (0, 1)");
    }
    if (!(fail_prob > 0.0) || !(fail_prob < 1.0)) {
        throw config_error("sample_size needs fail_prob in (0, 1)");
    }
    const double c = regime == SampleRegime::Conservative9 ? 9.0 : 6.0;
    const double k = std::ceil(c * std::log(2.0 / fail_prob) / (nu * nu));
    if (!(k < 9.2e18)) throw numeric_error("sample size exceeds integer range");
    return static_cast<std::int64_t>(k);
}

double min_right_bound(double epsilon, double delta, std::int64_t k) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw config_error("min_right_bound needs epsilon > 0");
    }
    if (!(delta > 0.0) || !(delta <= 0.1)) {
        throw config_error("min_right_bound needs delta in (0, 0.1]");
    }
    if (k < 1) throw config_error("min_right_bound needs k >= 1");
    const double l1e = std::log1p(epsilon);
    const double shifted = delta * std::log(delta) + l1e;
    if (!(shifted > 0.0)) {
        throw config_error(
            "min-estimator bound inapplicable: delta*log(delta) + log(1+eps) "
            "must be positive (epsilon too small for this delta)");
    }
    const double exponent = static_cast<double>(k) * std::log(0.5) *
                            (delta + delta / l1e + delta / shifted);
    return std::min(1.0, std::exp(exponent));
}

}  // namespace tail
}  // namespace cc
