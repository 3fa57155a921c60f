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

#include "clothoidfit/fresnel.hpp"

#include "clothoidfit/errors.hpp"

#include <cmath>
#include <numbers>

namespace clothoidfit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesLimit = 1.6;
constexpr double kAsymptoticLimit = 5.5;
// Beyond this |t| the auxiliary terms are below 1e-16 and C, S are +-1/2.
constexpr double kSaturationLimit = 1e16;

struct ChebyshevSeries {
    int n;
    double c[32];
};

struct AuxInterval {
    double t0, t1;
    double w0, w1;
    ChebyshevSeries F;
    ChebyshevSeries G;
};

#include "fresnel_aux_tables.inc"

double clenshaw(const ChebyshevSeries& series, double x) noexcept
{
    double b1 = 0.0;
    double b2 = 0.0;
    const double x2 = 2.0 * x;
    for (int j = series.n - 1; j >= 1; --j) {
        const double b0 = series.c[j] + x2 * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return series.c[0] + x * b1 - b2;
}

void check_finite(double t, const char* who)
{
    if (!std::isfinite(t)) {
        throw DomainError(std::string(who) + ": argument is not finite");
    }
}

// Maclaurin series, |t| <= kSeriesLimit. Accumulated in long double because
// the alternating terms reach ~10x the sum at the upper end of the range.
FresnelCS fresnel_series(double t) noexcept
{
    const long double u = 0.5L * std::numbers::pi_v<long double> * t * t;
    const long double u2 = u * u;
    long double p = 1.0L; // (-1)^n u^{2n} / (2n)!
    long double q = u;    // (-1)^n u^{2n+1} / (2n+1)!
    long double sum_c = 0.0L;
    long double sum_s = 0.0L;
    for (int n = 0; n < 40; ++n) {
        const long double tc = p / (4 * n + 1);
        const long double ts = q / (4 * n + 3);
        sum_c += tc;
        sum_s += ts;
        if (std::fabs(tc) <= 1e-21L * std::fabs(sum_c) &&
            std::fabs(ts) <= 1e-21L * std::fabs(sum_s)) {
            break;
        }
        p *= -u2 / ((2 * n + 1) * (2 * n + 2));
        q *= -u2 / ((2 * n + 2) * (2 * n + 3));
    }
    return {static_cast<double>(t * sum_c), static_cast<double>(t * sum_s)};
}

// Asymptotic expansions of f and g, t >= kAsymptoticLimit.
FresnelAuxiliary aux_asymptotic(double t) noexcept
{
    const double x = kPi * t * t;
    const double inv_x2 = 1.0 / (x * x);
    double sum_f = 1.0;
    double sum_g = 1.0;
    double term_f = 1.0; // (-1)^m (4m-1)!! / x^{2m}
    double term_g = 1.0; // (-1)^m (4m+1)!! / x^{2m}
    for (int m = 1; m < 60; ++m) {
        const double next_f = -term_f * (4 * m - 3) * (4 * m - 1) * inv_x2;
        const double next_g = -term_g * (4 * m - 1) * (4 * m + 1) * inv_x2;
        if (std::fabs(next_f) >= std::fabs(term_f)) {
            break;
        }
        term_f = next_f;
        term_g = next_g;
        sum_f += term_f;
        sum_g += term_g;
        if (std::fabs(term_g) < 1e-18) {
            break;
        }
    }
    return {sum_f / (kPi * t), sum_g / (kPi * kPi * t * t * t)};
}

FresnelAuxiliary aux_chebyshev(double t) noexcept
{
    const double w = 1.0 / (t * t);
    for (const AuxInterval& iv : kAuxIntervals) {
        if (t <= iv.t1) {
            const double x = (2.0 * w - (iv.w0 + iv.w1)) / (iv.w1 - iv.w0);
            return {clenshaw(iv.F, x) / (kPi * t),
                    clenshaw(iv.G, x) / (kPi * kPi * t * t * t)};
        }
    }
    return aux_asymptotic(t);
}

// f, g recovered from C, S where the power series is used.
FresnelAuxiliary aux_from_series(double t) noexcept
{
    const FresnelCS cs = fresnel_series(t);
    double s = 0.0;
    double c = 0.0;
    sincos_half_pi_square(t, s, c);
    const double dc = cs.C - 0.5;
    const double ds = cs.S - 0.5;
    return {dc * s - ds * c, -dc * c - ds * s};
}

// 1 - cos(pi/2 t^2) without cancellation for small t.
double one_minus_cos(double s, double c) noexcept
{
    return c > 0.0 ? s * s / (1.0 + c) : 1.0 - c;
}

} // namespace

void sincos_half_pi_square(double t, double& sin_out, double& cos_out) noexcept
{
    // t^2 = hi + lo exactly; reduce modulo the period 4 of sin(pi/2 y).
    const double hi = t * t;
    const double lo = std::fma(t, t, -hi);
    double r = std::fmod(hi, 4.0) + std::fmod(lo, 4.0);
    while (r > 2.0) {
        r -= 4.0;
    }
    while (r < -2.0) {
        r += 4.0;
    }
    const double angle = 0.5 * kPi * r;
    sin_out = std::sin(angle);
    cos_out = std::cos(angle);
}

FresnelAuxiliary fresnel_auxiliary(double t)
{
    check_finite(t, "fresnel_auxiliary");
    const double at = std::fabs(t);
    if (at <= kSeriesLimit) {
        return aux_from_series(at);
    }
    if (at < kAsymptoticLimit) {
        return aux_chebyshev(at);
    }
    return aux_asymptotic(at);
}

FresnelCS fresnel(double t)
{
    check_finite(t, "fresnel");
    const double at = std::fabs(t);
    if (at <= kSeriesLimit) {
        return fresnel_series(t);
    }
    const double sign = t < 0.0 ? -1.0 : 1.0;
    if (at > kSaturationLimit) {
        return {0.5 * sign, 0.5 * sign};
    }
    const FresnelAuxiliary aux = at < kAsymptoticLimit ? aux_chebyshev(at) : aux_asymptotic(at);
    double s = 0.0;
    double c = 0.0;
    sincos_half_pi_square(at, s, c);
    return {sign * (0.5 + aux.f * s - aux.g * c), sign * (0.5 - aux.f * c - aux.g * s)};
}

FresnelMomenta fresnel_momenta(double t, int order)
{
    check_finite(t, "fresnel_momenta");
    if (order < 0 || order > kMaxMomentOrder) {
        throw DomainError("fresnel_momenta: order must lie in [0, 3]");
    }
    FresnelMomenta m;
    m.t = t;
    m.order = order;
    const FresnelCS cs = fresnel(t);
    m.C[0] = cs.C;
    m.S[0] = cs.S;
    if (order == 0) {
        return m;
    }
    double s = 0.0;
    double c = 0.0;
    sincos_half_pi_square(t, s, c);
    m.C[1] = s / kPi;
    m.S[1] = one_minus_cos(s, c) / kPi;
    if (order >= 2) {
        m.C[2] = (t * s - m.S[0]) / kPi;
        m.S[2] = (m.C[0] - t * c) / kPi;
    }
    if (order >= 3) {
        m.C[3] = (t * t * s - 2.0 * m.S[1]) / kPi;
        m.S[3] = (2.0 * m.C[1] - t * t * c) / kPi;
    }
    return m;
}

FresnelMomentaSplit fresnel_momenta_split(double t, int order)
{
    check_finite(t, "fresnel_momenta_split");
    if (order < 0 || order > kMaxMomentOrder) {
        throw DomainError("fresnel_momenta_split: order must lie in [0, 3]");
    }
    using namespace std::complex_literals;
    FresnelMomentaSplit m;
    m.t = t;
    m.order = order;
    const double sign = t < 0.0 ? -1.0 : 1.0;
    const FresnelAuxiliary aux = fresnel_auxiliary(t);
    m.P[0] = sign * std::complex<double>(0.5, 0.5);
    m.Q[0] = -sign * std::complex<double>(aux.g, aux.f);
    if (order >= 1) {
        m.P[1] = 1i / kPi;
        m.Q[1] = -1i / kPi;
    }
    // E_{j+1} = (t^j e^{iu} - j E_{j-1}) / (i pi)
    double tj = 1.0;
    for (int j = 1; j < order; ++j) {
        tj *= t;
        m.P[j + 1] = 1i * static_cast<double>(j) * m.P[j - 1] / kPi;
        m.Q[j + 1] = -1i * (tj - static_cast<double>(j) * m.Q[j - 1]) / kPi;
    }
    return m;
}

} // namespace clothoidfit
