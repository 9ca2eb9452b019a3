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

#include "cc/stable_dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cc/errors.hpp"
#include "cc/quadrature.hpp"

namespace cc::stable {

namespace {

constexpr double kPi = std::numbers::pi;

void
check_delta_half(double delta, const char* who) {
    if (!(delta > 0.0) || !(delta < 0.5)) {
        throw config_error(std::string(who) +
                           ": delta must lie in (0, 0.5)");
    }
}

// log g(0) = log delta + (alpha/delta) log alpha.
double
log_g0(double delta) noexcept {
    const double alpha = 1.0 - delta;
    return std::log(delta) + (alpha / delta) * std::log(alpha);
}

}  // namespace

namespace detail {

double
log_g(double theta, double delta) noexcept {
    const double alpha = 1.0 - delta;
    const double sv = std::sin(theta);
    const double t2 = std::log(std::sin(delta * theta)) - std::log(sv);
    if (alpha < 1e-9) {
        // Near delta = 1 the ratio sin(alpha theta)/sin(theta) is minuscule
        // rather than near 1, so direct logs are the accurate form; at
        // alpha = 0 the weighted term vanishes (alpha log alpha -> 0).
        if (alpha == 0.0) {
            return t2;
        }
        return (alpha / delta) *
                   (std::log(std::sin(alpha * theta)) - std::log(sv)) +
               t2;
    }
    // log(sin(alpha theta)/sin theta) without cancellation:
    // sin theta - sin(alpha theta) = 2 cos(theta - d theta/2) sin(d theta/2).
    const double hd = 0.5 * delta * theta;
    const double lr =
        std::log1p(-2.0 * std::cos(theta - hd) * std::sin(hd) / sv);
    return (alpha / delta) * lr + t2;
}

}  // namespace detail

double
g_eval(double theta, double delta) {
    check_delta_half(delta, "g_eval");
    if (!(theta >= 0.0) || !(theta <= kPi)) {
        throw config_error("g_eval: theta must lie in [0, pi]");
    }
    if (theta == 0.0) {
        return std::exp(log_g0(delta));
    }
    return std::exp(detail::log_g(theta, delta));
}

double
cdf_exact(double t, double delta) {
    check_delta_half(delta, "cdf_exact");
    if (!(t > 0.0)) {
        return 0.0;
    }
    const double alpha = 1.0 - delta;
    const double logy = -(alpha / delta) * std::log(t);
    if (logy > 709.0) {
        return 0.0;  // exp(-y g) vanishes over the whole range
    }
    const double y = std::exp(logy);
    if (y == 0.0) {
        return 1.0;
    }
    const double lg0 = log_g0(delta);
    // When y g(0) >> 1 the surviving mass sits in a shrinking neighborhood
    // of theta = 0 where g(theta) ~ g(0) exp(theta^2/2); seed knots there.
    double hint = 0.0;
    const double yg0 = y * std::exp(lg0);
    if (yg0 > 2.0) {
        hint = std::sqrt(2.0 / yg0);
    }
    const auto integrand = [&](double th) {
        const double lg = th == 0.0 ? lg0 : detail::log_g(th, delta);
        const double e = logy + lg;  // log(y g(theta)), overflow-safe
        if (e > 700.0) {
            return 0.0;
        }
        return std::exp(-std::exp(e));
    };
    const auto knots = quad::theta_panels(delta, hint);
    const double integral = quad::integrate_panels(integrand, knots, 1e-10);
    return std::clamp(integral / kPi, 0.0, 1.0);
}

double
cdf_approx(double t, double delta) {
    check_delta_half(delta, "cdf_approx");
    if (!(t > 0.0)) {
        return 0.0;
    }
    const double alpha = 1.0 - delta;
    const double loge = -(alpha / delta) * std::log(t) + log_g0(delta);
    if (loge > 709.0) {
        return 0.0;
    }
    return std::exp(-std::exp(loge));
}

namespace {

// Fritsch-Carlson monotone slopes for data (x, y) with x strictly
// increasing; endpoints use the one-sided three-point rule with the usual
// shape clamps.
std::vector<double>
pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n == 2) {
        d[0] = d[1] = (y[1] - y[0]) / (x[1] - x[0]);
        return d;
    }
    std::vector<double> h(n - 1);
    std::vector<double> m(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        m[i] = (y[i + 1] - y[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (m[i - 1] * m[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / m[i - 1] + w2 / m[i]);
        }
    }
    const auto edge = [](double h0, double h1, double m0, double m1) {
        double dd = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
        if (dd * m0 <= 0.0) {
            return 0.0;
        }
        if (m0 * m1 <= 0.0 && std::fabs(dd) > 3.0 * std::fabs(m0)) {
            return 3.0 * m0;
        }
        return dd;
    };
    d[0] = edge(h[0], h[1], m[0], m[1]);
    d[n - 1] = edge(h[n - 2], h[n - 3], m[n - 2], m[n - 3]);
    return d;
}

}  // namespace

CdfTable
CdfTable::build(double delta) {
    check_delta_half(delta, "CdfTable::build");
    constexpr int kCore = 1200;
    constexpr int kTail = 1200;
    constexpr double kTop = 25.0;
    const double lo = -15.0 * delta;
    const double hi = 60.0 * delta;
    std::vector<double> u;
    u.reserve(kCore + kTail);
    for (int i = 0; i < kCore; ++i) {
        u.push_back(lo + (hi - lo) * static_cast<double>(i) /
                             static_cast<double>(kCore - 1));
    }
    if (hi < kTop) {
        const double r = std::log(kTop / hi);
        for (int i = 1; i < kTail; ++i) {
            u.push_back(hi * std::exp(r * static_cast<double>(i) /
                                      static_cast<double>(kTail - 1)));
        }
    }
    CdfTable tab;
    tab.f_.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        tab.f_[i] = cdf_exact(std::exp(u[i]), delta);
    }
    // Quadrature noise at the 1e-10 level may leave micro-inversions; the
    // interpolant requires nondecreasing data.
    for (std::size_t i = 1; i < tab.f_.size(); ++i) {
        if (tab.f_[i] < tab.f_[i - 1]) {
            tab.f_[i] = tab.f_[i - 1];
        }
    }
    tab.u_ = std::move(u);
    tab.d_ = pchip_slopes(tab.u_, tab.f_);
    return tab;
}

double
CdfTable::operator()(double t) const {
    if (!(t > 0.0)) {
        return 0.0;
    }
    const double uu = std::log(t);
    if (uu <= u_.front()) {
        return f_.front();
    }
    if (uu >= u_.back()) {
        return f_.back();
    }
    const auto it = std::upper_bound(u_.begin(), u_.end(), uu);
    const std::size_t j = static_cast<std::size_t>(it - u_.begin()) - 1;
    const double h = u_[j + 1] - u_[j];
    const double s = (uu - u_[j]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double v = (2.0 * s3 - 3.0 * s2 + 1.0) * f_[j] +
                     (s3 - 2.0 * s2 + s) * h * d_[j] +
                     (-2.0 * s3 + 3.0 * s2) * f_[j + 1] +
                     (s3 - s2) * h * d_[j + 1];
    return std::clamp(v, 0.0, 1.0);
}

double
mle_loglik(const std::vector<double>& x, double c_alpha, double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw config_error("mle_loglik: alpha must lie in (0, 1)");
    }
    if (!(c_alpha > 0.0) || !std::isfinite(c_alpha)) {
        throw config_error("mle_loglik: c_alpha must be positive and finite");
    }
    if (x.empty()) {
        throw input_error("mle_loglik: empty sample");
    }
    const double delta = 1.0 - alpha;
    const double aod = alpha / delta;
    const double lg0 = log_g0(delta);
    const double logc = std::log(c_alpha) / alpha;
    double ll = 0.0;
    for (double xj : x) {
        if (!(xj > 0.0)) {
            throw model_violation("mle_loglik: observations must be positive");
        }
        const double lr = std::log(xj) - logc;  // log(x/c)
        // log density: -g0 (x/c)^(-a/d) + log g0 + log(a/d)
        //              - (a/d + 1) log(x/c) - log c
        ll += -std::exp(lg0 - aod * lr) + lg0 + std::log(aod) -
              (aod + 1.0) * lr - logc;
    }
    return ll;
}

double
neg_moment(double lambda, double alpha, double f_alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw config_error("neg_moment: alpha must lie in (0, 1)");
    }
    if (!(lambda < alpha)) {
        throw config_error("neg_moment: requires lambda < alpha");
    }
    if (!(f_alpha > 0.0)) {
        throw input_error("neg_moment: f_alpha must be positive");
    }
    return std::exp(std::lgamma(1.0 - lambda / alpha) -
                    std::lgamma(1.0 - lambda) +
                    (lambda / alpha) * std::log(f_alpha));
}

}  // namespace cc::stable
