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

#ifndef CLOTHOIDFIT_CLOTHOID_CURVE_HPP
#define CLOTHOIDFIT_CLOTHOID_CURVE_HPP

#include "clothoidfit/generalized_fresnel.hpp"

#include <vector>

namespace clothoidfit {

struct HermiteData;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// One row of a sampled clothoid.
struct CurveSample {
    double s = 0.0;
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    double kappa = 0.0;
};

/// Clothoid segment with curvature kappa + kappa_prime * s on [0, length]:
///
///     x(s) = x0 + int_0^s cos(kappa_prime/2 tau^2 + kappa tau + theta0) dtau
///     y(s) = y0 + int_0^s sin(kappa_prime/2 tau^2 + kappa tau + theta0) dtau
///
/// Evaluation outside [0, length] extrapolates the same formulas.
class ClothoidCurve {
public:
    /// Throws DomainError unless all values are finite and length > 0.
    ClothoidCurve(double x0, double y0, double theta0, double kappa, double kappa_prime,
                  double length);

    double x0() const noexcept { return x0_; }
    double y0() const noexcept { return y0_; }
    double theta0() const noexcept { return theta0_; }
    double kappa() const noexcept { return kappa_; }
    double kappa_prime() const noexcept { return kappa_prime_; }
    double length() const noexcept { return length_; }

    /// Position at arc length s. Throws DomainError for non-finite s.
    Point2 point_at(double s, const EvalConfig& cfg = {}) const;

    /// Tangent angle theta0 + kappa s + kappa_prime s^2 / 2 (not wrapped).
    double angle_at(double s) const noexcept;

    /// Curvature kappa + kappa_prime s.
    double curvature_at(double s) const noexcept;

    /// n >= 2 equally spaced samples, s_i = i L / (n - 1). Throws DomainError
    /// for n < 2.
    std::vector<CurveSample> sample(int n, const EvalConfig& cfg = {}) const;

private:
    double x0_;
    double y0_;
    double theta0_;
    double kappa_;
    double kappa_prime_;
    double length_;
};

/// Distance between the curve end point and the requested end (x1, y1).
double endpoint_residual(const ClothoidCurve& curve, const HermiteData& data,
                         const EvalConfig& cfg = {});

} // namespace clothoidfit

#endif // CLOTHOIDFIT_CLOTHOID_CURVE_HPP
