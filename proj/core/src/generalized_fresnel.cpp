// Copyright 2026 The clothoidfit Authors
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

#include "clothoidfit/generalized_fresnel.hpp"

#include "clothoidfit/errors.hpp"
#include "clothoidfit/fresnel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace clothoidfit {
namespace {

constexpr double kPi = std::numbers::pi;

// Above this |b| the Lommel series for low orders cancels badly (about
// 1e-15 absolute at |b| = 10, 1e-11 at |b| = 20).
constexpr double kLommelCancellationLimit = 10.0;

// Order budget of the on-stack buffers of eval_xy_a_small.
constexpr int kStackOrders = 64;

void check_order(int k, const char* who)
{
    if (k < 1 || k > kMaxIntegralCount) {
        throw DomainError(std::string(who) + ": k must lie in [1, 3]");
    }
}

void check_finite(double v, const char* who)
{
    if (!std::isfinite(v)) {
        throw DomainError(std::string(who) + ": argument is not finite");
    }
}

} // namespace

void EvalConfig::validate() const
{
    if (!(epsilon_a > 0.0) || !std::isfinite(epsilon_a)) {
        throw DomainError("EvalConfig: epsilon_a must be positive");
    }
    if (series_order_p < 2) {
        throw DomainError("EvalConfig: series_order_p must be at least 2");
    }
    if (!(epsilon_b >= 0.0) || !(lommel_rel_tol > 0.0)) {
        throw DomainError("EvalConfig: epsilon_b and lommel_rel_tol must be positive");
    }
    if (!(truncation_bound() < 1e-16)) {
        throw DomainError("EvalConfig: small-a truncation bound exceeds 1e-16");
    }
}

double EvalConfig::truncation_bound() const
{
    return std::pow(0.5 * epsilon_a, 2 * series_order_p) * std::cosh(epsilon_a);
}

LargeParamDecomposition LargeParamDecomposition::from(double a, double b)
{
    if (a == 0.0) {
        throw DomainError("LargeParamDecomposition: a must be nonzero");
    }
    LargeParamDecomposition d;
    const double abs_a = std::fabs(a);
    d.sigma = a > 0.0 ? 1 : -1;
    d.z = d.sigma * std::sqrt(abs_a / kPi);
    d.omega_minus = b / std::sqrt(kPi * abs_a);
    d.omega_plus = d.omega_minus + d.z;
    d.eta = -b * b / (2.0 * a);
    return d;
}

double LargeParamDecomposition::phase(double tau) const noexcept
{
    const double xi = z * tau + omega_minus;
    return 0.5 * kPi * sigma * xi * xi + eta;
}

double reduced_lommel(double mu, double nu, double b, double rel_tol)
{
    const double d0 = (mu + nu + 1.0) * (mu - nu + 1.0);
    if (d0 == 0.0) {
        throw DomainError("reduced_lommel: alpha_1(mu, nu) vanishes");
    }
    double term = 1.0 / d0;
    double sum = term;
    for (int n = 1; n < 1000; ++n) {
        const double lo = 2.0 * n + mu - nu + 1.0;
        const double hi = 2.0 * n + mu + nu + 1.0;
        if (lo == 0.0 || hi == 0.0) {
            throw DomainError("reduced_lommel: alpha_n(mu, nu) vanishes");
        }
        term *= (-b / lo) * (b / hi);
        sum += term;
        if (std::fabs(term) <= rel_tol * std::fabs(sum)) {
            break;
        }
    }
    return sum;
}

void eval_xy_a_zero(double b, std::span<double> X, std::span<double> Y, const EvalConfig& cfg)
{
    check_finite(b, "eval_xy_a_zero");
    if (X.size() != Y.size()) {
        throw DomainError("eval_xy_a_zero: X and Y must have the same length");
    }
    const int count = static_cast<int>(X.size());
    if (count == 0) {
        return;
    }
    // X_j is even in b and Y_j odd; work with |b| and flip Y at the end.
    const double ab = std::fabs(b);
    const double sb = std::sin(ab);
    const double cb = std::cos(ab);
    if (ab < cfg.epsilon_b) {
        const double b2 = ab * ab;
        X[0] = 1.0 - (b2 / 6.0) * (1.0 - (b2 / 20.0) * (1.0 - b2 / 42.0));
        Y[0] = (ab / 2.0) * (1.0 - (b2 / 12.0) * (1.0 - b2 / 30.0));
    } else {
        X[0] = sb / ab;
        Y[0] = (1.0 - cb) / ab;
    }

    int first_lommel = 1;
    if (ab > kLommelCancellationLimit) {
        // Forward recurrence amplifies errors by j/|b| per step: stable for j < |b|.
        first_lommel = std::min(count, static_cast<int>(std::floor(ab)));
        for (int j = 1; j < first_lommel; ++j) {
            X[j] = (sb - j * Y[j - 1]) / ab;
            Y[j] = (j * X[j - 1] - cb) / ab;
        }
    }

    if (first_lommel < count) {
        const double b2 = ab * ab;
        const double d = sb - ab * cb;
        const double tol = cfg.lommel_rel_tol;
        double w_a = reduced_lommel(first_lommel + 0.5, 1.5, ab, tol);
        double w_d = reduced_lommel(first_lommel + 0.5, 0.5, ab, tol);
        for (int j = first_lommel; j < count; ++j) {
            const double w_b = reduced_lommel(j + 1.5, 0.5, ab, tol);
            const double w_c = reduced_lommel(j + 1.5, 1.5, ab, tol);
            X[j] = (j * ab * sb * w_a + d * ab * w_b + cb) / (1.0 + j);
            Y[j] = (-b2 * sb * w_c + sb) / (2.0 + j) + d * w_d;
            w_a = w_c;
            w_d = w_b;
        }
    }

    if (b < 0.0) {
        for (double& y : Y) {
            y = -y;
        }
    }
}

XYValues eval_xy_a_small(double a, double b, int k, int p, const EvalConfig& cfg)
{
    check_order(k, "eval_xy_a_small");
    check_finite(a, "eval_xy_a_small");
    check_finite(b, "eval_xy_a_small");
    if (p < 0) {
        throw DomainError("eval_xy_a_small: series order must be non-negative");
    }
    const int orders = k + 4 * p + 2;
    std::array<double, kStackOrders> stack_x;
    std::array<double, kStackOrders> stack_y;
    std::vector<double> heap_x;
    std::vector<double> heap_y;
    std::span<double> x0;
    std::span<double> y0;
    if (orders <= kStackOrders) {
        x0 = std::span<double>(stack_x.data(), orders);
        y0 = std::span<double>(stack_y.data(), orders);
    } else {
        heap_x.resize(orders);
        heap_y.resize(orders);
        x0 = heap_x;
        y0 = heap_y;
    }
    eval_xy_a_zero(b, x0, y0, cfg);

    XYValues out;
    out.count = k;
    const double half_a = 0.5 * a;
    for (int j = 0; j < k; ++j) {
        out.X[j] = x0[j] - half_a * y0[j + 2];
        out.Y[j] = y0[j] + half_a * x0[j + 2];
    }
    // term = (-1)^n (a/2)^{2n} / (2n)!
    double term = 1.0;
    for (int n = 1; n <= p; ++n) {
        term *= -a * a / (8.0 * n * (2.0 * n - 1.0));
        const double s = a / (4.0 * n + 2.0);
        for (int j = 0; j < k; ++j) {
            out.X[j] += term * (x0[4 * n + j] - s * y0[4 * n + j + 2]);
            out.Y[j] += term * (y0[4 * n + j] + s * x0[4 * n + j + 2]);
        }
    }
    return out;
}

XYValues eval_xy_a_large(double a, double b, int k)
{
    check_order(k, "eval_xy_a_large");
    check_finite(a, "eval_xy_a_large");
    check_finite(b, "eval_xy_a_large");
    const LargeParamDecomposition d = LargeParamDecomposition::from(a, b);

    FresnelMomentaSplit plus = fresnel_momenta_split(d.omega_plus, k - 1);
    FresnelMomentaSplit minus = fresnel_momenta_split(d.omega_minus, k - 1);
    if (d.sigma < 0) {
        for (int j = 0; j < k; ++j) {
            plus.P[j] = std::conj(plus.P[j]);
            plus.Q[j] = std::conj(plus.Q[j]);
            minus.P[j] = std::conj(minus.P[j]);
            minus.Q[j] = std::conj(minus.Q[j]);
        }
    }

    // The oscillating factors combine with e^{i eta} into the integrand phase
    // at tau = 1 (a/2 + b) and at tau = 0 (zero), so the large angles
    // pi/2 omega^2 and eta never appear separately.
    const std::complex<double> end_phase = std::polar(1.0, 0.5 * a + b);
    const std::complex<double> eta_phase = std::polar(1.0, d.eta);
    std::array<std::complex<double>, kMaxIntegralCount> delta;
    for (int j = 0; j < k; ++j) {
        delta[j] = (plus.P[j] - minus.P[j]) * eta_phase + plus.Q[j] * end_phase - minus.Q[j];
    }

    constexpr double binomial[kMaxIntegralCount][kMaxIntegralCount] = {
        {1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}, {1.0, 2.0, 1.0}};
    XYValues out;
    out.count = k;
    const double shift = -d.omega_minus;
    double z_pow = d.z;
    for (int n = 0; n < k; ++n) {
        std::complex<double> acc = 0.0;
        double shift_pow = 1.0; // shift^{n-j}, accumulated from j = n downwards
        for (int j = n; j >= 0; --j) {
            acc += binomial[n][j] * shift_pow * delta[j];
            shift_pow *= shift;
        }
        const std::complex<double> v = acc / z_pow;
        out.X[n] = v.real();
        out.Y[n] = v.imag();
        z_pow *= d.z;
    }
    return out;
}

XYValues eval_xy(const GeneralizedParams& params, const EvalConfig& cfg)
{
    check_order(params.k, "eval_xy");
    check_finite(params.a, "eval_xy");
    check_finite(params.b, "eval_xy");
    check_finite(params.c, "eval_xy");
    XYValues base = std::fabs(params.a) < cfg.epsilon_a
                        ? eval_xy_a_small(params.a, params.b, params.k, cfg.series_order_p, cfg)
                        : eval_xy_a_large(params.a, params.b, params.k);
    if (params.c == 0.0) {
        return base;
    }
    const double cc = std::cos(params.c);
    const double sc = std::sin(params.c);
    XYValues out;
    out.count = base.count;
    for (int j = 0; j < base.count; ++j) {
        out.X[j] = base.X[j] * cc - base.Y[j] * sc;
        out.Y[j] = base.X[j] * sc + base.Y[j] * cc;
    }
    return out;
}

} // namespace clothoidfit
