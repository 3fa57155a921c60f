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

#ifndef CLOTHOIDFIT_FITTER_HPP
#define CLOTHOIDFIT_FITTER_HPP

#include "clothoidfit/clothoid_curve.hpp"
#include "clothoidfit/generalized_fresnel.hpp"

#include <array>
#include <string_view>

namespace clothoidfit {

/// G1 Hermite data: two points with tangent angles (radians).
struct HermiteData {
    double x0 = 0.0;
    double y0 = 0.0;
    double theta0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;
    double theta1 = 0.0;
};

/// Hermite data expressed in the chord frame.
struct ReducedProblem {
    double r = 0.0;      ///< chord length
    double varphi = 0.0; ///< chord direction
    double phi0 = 0.0;   ///< theta0 - varphi, wrapped to [-pi, pi]
    double phi1 = 0.0;   ///< theta1 - varphi, wrapped to [-pi, pi]
    double delta = 0.0;  ///< phi1 - phi0
};

/// Closed-form approximations of the root A(phi0, phi1) used to start Newton.
enum class GuessVariant { linear, cubic, quintic };

/// Least-squares coefficients of the cubic and quintic guesses.
struct GuessCoefficients {
    std::array<double, 3> c{3.070645, 0.947923, -0.673029};
    std::array<double, 6> d{2.989696, 0.71622, -0.458969, -0.502821, 0.26106, -0.045854};
};

struct FitConfig {
    /// Newton stops once |g(A)| <= tol.
    double tol = 1e-12;
    int max_iter = 100;
    GuessVariant guess = GuessVariant::quintic;
    EvalConfig eval{};

    /// Throws DomainError on tol <= 0, max_iter < 1 or an invalid EvalConfig.
    void validate() const;
};

/// Root of g together with solver bookkeeping.
struct RootSolution {
    double A = 0.0;
    /// Residual evaluations of g, counting the one that accepted the root.
    int iterations = 0;
    double residual = 0.0;
    /// True when the bracketing fallback produced the root.
    bool bracketed = false;
};

struct FitResult {
    ClothoidCurve curve;
    double A = 0.0;            ///< kappa_prime L^2 / 2
    double B = 0.0;            ///< kappa L = delta - A
    int iterations = 0;
    double residual_g = 0.0;
    double endpoint_error = 0.0;
    bool bracketed = false;
};

/// Wraps an angle into [-pi, pi] by repeated +-2 pi steps. pi and -pi are
/// both left unchanged.
double normalize_angle(double phi);

/// Chord-frame reduction. Throws DegenerateInputError when the endpoints
/// coincide and DomainError for non-finite input.
ReducedProblem reduce(const HermiteData& data);

/// g(A) = Y_0(2A, delta - A, phi0).
double g_eval(double A, const ReducedProblem& rp, const EvalConfig& cfg = {});

/// g'(A) = X_2(2A, delta - A, phi0) - X_1(2A, delta - A, phi0).
double g_prime(double A, const ReducedProblem& rp, const EvalConfig& cfg = {});

/// h(A) = X_0(2A, delta - A, phi0); the length is r / h(A).
double h_eval(double A, const ReducedProblem& rp, const EvalConfig& cfg = {});

double initial_guess(double phi0, double phi1, GuessVariant variant,
                     const GuessCoefficients& coeffs = {});

/// Half-width of the interval [-A_max, A_max] holding the unique admissible
/// root. The angles are first mapped by reversal and mirroring onto
/// |phi0| <= phi1. Throws ExcludedConfigurationError for phi0 = -phi1 = +-pi.
double a_max_bound(double phi0, double phi1);

/// Newton on g from the configured guess, with a bracketing fallback on
/// [-A_max, A_max] when g' underflows, an iterate escapes beyond 2 A_max, or
/// the converged root is inadmissible. Once |g| <= tol the accepted iterate
/// gets one extra Newton step from the derivative already computed; that
/// step is not counted in `iterations`.
RootSolution solve_a(const ReducedProblem& rp, const FitConfig& cfg = {});

/// Solves the G1 Hermite problem with a single clothoid segment.
FitResult build_clothoid(const HermiteData& data, const FitConfig& cfg = {});

std::string_view to_string(GuessVariant variant) noexcept;

/// Parses "linear", "cubic" or "quintic"; throws DomainError otherwise.
GuessVariant parse_guess_variant(std::string_view name);

} // namespace clothoidfit

#endif // CLOTHOIDFIT_FITTER_HPP
