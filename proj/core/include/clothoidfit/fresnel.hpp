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

#ifndef CLOTHOIDFIT_FRESNEL_HPP
#define CLOTHOIDFIT_FRESNEL_HPP

#include <array>
#include <complex>

namespace clothoidfit {

/// Values of the Fresnel integrals
///
///     C(t) = int_0^t cos(pi/2 tau^2) dtau,   S(t) = int_0^t sin(pi/2 tau^2) dtau.
struct FresnelCS {
    double C = 0.0;
    double S = 0.0;
};

/// Auxiliary functions f, g of the Fresnel integrals, defined for t >= 0 by
///
///     C(t) = 1/2 + f(t) sin(pi/2 t^2) - g(t) cos(pi/2 t^2)
///     S(t) = 1/2 - f(t) cos(pi/2 t^2) - g(t) sin(pi/2 t^2)
struct FresnelAuxiliary {
    double f = 0.0;
    double g = 0.0;
};

/// Highest momentum order supported by fresnel_momenta(). The recurrence
/// used for the momenta is unstable for larger orders.
inline constexpr int kMaxMomentOrder = 3;

/// Momenta C_j(t) = int_0^t tau^j cos(pi/2 tau^2) dtau and the matching S_j,
/// for j = 0..order. Entries above `order` are zero.
struct FresnelMomenta {
    double t = 0.0;
    int order = 0;
    std::array<double, kMaxMomentOrder + 1> C{};
    std::array<double, kMaxMomentOrder + 1> S{};
};

/// Momenta written as E_j(t) = C_j(t) + i S_j(t) = P_j(t) + Q_j(t) e^{i pi t^2/2}.
///
/// P_j depends on t only through sign(t); Q_j is built from powers of t and
/// the auxiliary functions. Keeping the oscillating factor separate lets a
/// caller combine it with other phases before it is evaluated, which avoids
/// the cancellation of two large angles.
struct FresnelMomentaSplit {
    double t = 0.0;
    int order = 0;
    std::array<std::complex<double>, kMaxMomentOrder + 1> P{};
    std::array<std::complex<double>, kMaxMomentOrder + 1> Q{};
};

/// sin and cos of pi/2 t^2, with t^2 reduced modulo 4 in extended precision
/// so the result stays accurate for large |t|.
void sincos_half_pi_square(double t, double& sin_out, double& cos_out) noexcept;

/// Fresnel integrals C(t), S(t). Power series for |t| <= 1.6, auxiliary
/// functions otherwise. Throws DomainError for non-finite t.
FresnelCS fresnel(double t);

/// Auxiliary functions at |t|. Throws DomainError for non-finite t.
FresnelAuxiliary fresnel_auxiliary(double t);

/// Momenta up to `order` (0 <= order <= kMaxMomentOrder).
FresnelMomenta fresnel_momenta(double t, int order);

/// Split form of the momenta up to `order` (0 <= order <= kMaxMomentOrder).
FresnelMomentaSplit fresnel_momenta_split(double t, int order);

} // namespace clothoidfit

#endif // CLOTHOIDFIT_FRESNEL_HPP
