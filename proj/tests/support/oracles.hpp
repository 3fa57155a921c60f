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

// Reference values computed independently of the library: composite
// Gauss-Legendre quadrature in long double, plus the textbook series and
// recurrences the production code avoids.

#ifndef CLOTHOIDFIT_TESTS_ORACLES_HPP
#define CLOTHOIDFIT_TESTS_ORACLES_HPP

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

using real = long double;
inline constexpr real kPi = std::numbers::pi_v<long double>;

/// Integral of f over [lo, hi] by 30-point Gauss-Legendre on `pieces`
/// equal panels. Callers size `pieces` so each panel sees at most about half
/// a radian of phase change, which makes the rule exact to long double.
template <class F>
real integrate(F f, real lo, real hi, int pieces = 16)
{
    using Quad = boost::math::quadrature::gauss<real, 30>;
    real total = 0.0L;
    for (int i = 0; i < pieces; ++i) {
        const real a = lo + (hi - lo) * i / pieces;
        const real b = lo + (hi - lo) * (i + 1) / pieces;
        total += Quad::integrate(f, a, b);
    }
    return total;
}

/// C_k(t) = int_0^t tau^k cos(pi/2 tau^2).
inline real fresnel_c_moment(real t, int k)
{
    const int pieces = 8 + static_cast<int>(4 * std::fabs(t) * std::fabs(t));
    return integrate([k](real tau) { return std::pow(tau, k) * std::cos(kPi / 2 * tau * tau); },
                     0.0L, t, pieces);
}

inline real fresnel_s_moment(real t, int k)
{
    const int pieces = 8 + static_cast<int>(4 * std::fabs(t) * std::fabs(t));
    return integrate([k](real tau) { return std::pow(tau, k) * std::sin(kPi / 2 * tau * tau); },
                     0.0L, t, pieces);
}

/// Maclaurin series of C, S summed in long double (fine for |t| <= 3).
inline void fresnel_maclaurin(real t, real& c, real& s)
{
    const real u = kPi / 2 * t * t;
    c = 0.0L;
    s = 0.0L;
    real p = 1.0L;
    real q = u;
    for (int n = 0; n < 200; ++n) {
        c += p / (4 * n + 1);
        s += q / (4 * n + 3);
        p *= -u * u / ((2 * n + 1) * (2 * n + 2));
        q *= -u * u / ((2 * n + 2) * (2 * n + 3));
    }
    c *= t;
    s *= t;
}

inline int pieces_for(real a, real b)
{
    return 8 + static_cast<int>(std::fabs(a) + 2 * std::fabs(b));
}

/// X_k(a,b,c) = int_0^1 tau^k cos(a/2 tau^2 + b tau + c).
inline real gen_x(real a, real b, real c, int k)
{
    return integrate(
        [=](real t) { return std::pow(t, k) * std::cos(a / 2 * t * t + b * t + c); }, 0.0L,
        1.0L, pieces_for(a, b));
}

inline real gen_y(real a, real b, real c, int k)
{
    return integrate(
        [=](real t) { return std::pow(t, k) * std::sin(a / 2 * t * t + b * t + c); }, 0.0L,
        1.0L, pieces_for(a, b));
}

/// Clothoid position by direct quadrature of the defining integrals.
inline void clothoid_point(real x0, real y0, real theta0, real kappa, real kappa_prime, real s,
                           real& x, real& y)
{
    const int pieces
        = 8 + static_cast<int>(2 * std::fabs(kappa * s) + std::fabs(kappa_prime * s * s));
    auto phase = [=](real t) { return kappa_prime / 2 * t * t + kappa * t + theta0; };
    x = x0 + integrate([&](real t) { return std::cos(phase(t)); }, 0.0L, s, pieces);
    y = y0 + integrate([&](real t) { return std::sin(phase(t)); }, 0.0L, s, pieces);
}

/// X_j(0,b), Y_j(0,b) by the forward recurrence (unstable for j >> |b|).
inline void a_zero_recurrence(real b, int count, std::vector<real>& X, std::vector<real>& Y)
{
    X.assign(count, 0.0L);
    Y.assign(count, 0.0L);
    X[0] = std::sin(b) / b;
    Y[0] = (1 - std::cos(b)) / b;
    for (int j = 1; j < count; ++j) {
        X[j] = (std::sin(b) - j * Y[j - 1]) / b;
        Y[j] = (j * X[j - 1] - std::cos(b)) / b;
    }
}

/// Partial sum of the reduced Lommel series with a fixed number of terms.
inline real lommel_partial_sum(real mu, real nu, real b, int terms)
{
    real sum = 0.0L;
    for (int n = 0; n < terms; ++n) {
        real alpha = 1.0L;
        for (int m = 1; m <= n + 1; ++m) {
            alpha *= (mu + 2 * m - 1) * (mu + 2 * m - 1) - nu * nu;
        }
        sum += std::pow(-b * b, n) / alpha;
    }
    return sum;
}

} // namespace oracle

#endif // CLOTHOIDFIT_TESTS_ORACLES_HPP
