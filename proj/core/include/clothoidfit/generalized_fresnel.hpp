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

#ifndef CLOTHOIDFIT_GENERALIZED_FRESNEL_HPP
#define CLOTHOIDFIT_GENERALIZED_FRESNEL_HPP

#include <array>
#include <span>

namespace clothoidfit {

/// Tuning of the regime switch inside eval_xy().
struct EvalConfig {
    /// |a| below this uses the small-a series.
    double epsilon_a = 0.04;
    /// Truncation order p of the small-a series.
    int series_order_p = 5;
    /// |b| below this uses Taylor polynomials for X_0(0,b), Y_0(0,b).
    double epsilon_b = 1e-3;
    /// Relative cutoff of the reduced Lommel series. Terms below 1e-17 of the
    /// partial sum no longer change a double result.
    double lommel_rel_tol = 1e-17;

    /// Throws DomainError unless epsilon_a > 0, series_order_p >= 2 and the
    /// small-a truncation bound (epsilon_a/2)^(2p) cosh(epsilon_a) < 1e-16.
    void validate() const;

    /// (epsilon_a/2)^(2p) cosh(epsilon_a).
    double truncation_bound() const;
};

/// Largest k accepted by the public evaluators (indices 0..k-1).
inline constexpr int kMaxIntegralCount = 3;

/// Arguments of the generalized Fresnel integrals
///
///     X_j(a,b,c) = int_0^1 tau^j cos(a/2 tau^2 + b tau + c) dtau
///     Y_j(a,b,c) = int_0^1 tau^j sin(a/2 tau^2 + b tau + c) dtau
///
/// for j = 0..k-1.
struct GeneralizedParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    int k = 1;
};

/// X_j, Y_j for j < count; trailing entries are zero.
struct XYValues {
    int count = 0;
    std::array<double, kMaxIntegralCount> X{};
    std::array<double, kMaxIntegralCount> Y{};
};

/// Completion of the square a/2 tau^2 + b tau = pi/2 sigma (z tau + omega_minus)^2 + eta.
struct LargeParamDecomposition {
    int sigma = 1;
    double z = 0.0;
    double omega_minus = 0.0;
    double omega_plus = 0.0;
    double eta = 0.0;

    /// Throws DomainError for a == 0.
    static LargeParamDecomposition from(double a, double b);

    /// pi/2 sigma (z tau + omega_minus)^2 + eta.
    double phase(double tau) const noexcept;
};

/// Dispatching evaluator: small-a series for |a| < cfg.epsilon_a, large-a
/// formula otherwise, then rotation by c.
XYValues eval_xy(const GeneralizedParams& params, const EvalConfig& cfg = {});

/// c = 0 integrals through Fresnel momenta at omega_minus, omega_plus.
/// Valid for any a != 0; loses accuracy when b^2/|a| is large.
XYValues eval_xy_a_large(double a, double b, int k);

/// c = 0 integrals through the power series in a, truncated after n = p.
XYValues eval_xy_a_small(double a, double b, int k, int p, const EvalConfig& cfg = {});

/// X_j(0,b), Y_j(0,b) for j = 0..X.size()-1. Both spans must have the same
/// size. Uses the reduced Lommel series, switching to the forward recurrence
/// for j < |b| when |b| exceeds the Lommel cancellation limit.
void eval_xy_a_zero(double b, std::span<double> X, std::span<double> Y,
                    const EvalConfig& cfg = {});

/// Reduced Lommel series
///
///     w_{mu,nu}(b) = sum_{n>=0} (-b^2)^n / alpha_{n+1}(mu,nu),
///     alpha_n(mu,nu) = prod_{m=1}^n ((mu + 2m - 1)^2 - nu^2),
///
/// summed until |term| <= rel_tol |sum|. Throws DomainError when the first
/// denominator vanishes.
double reduced_lommel(double mu, double nu, double b, double rel_tol = 1e-50);

} // namespace clothoidfit

#endif // CLOTHOIDFIT_GENERALIZED_FRESNEL_HPP
