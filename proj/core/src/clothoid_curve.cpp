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

#include "clothoidfit/clothoid_curve.hpp"

#include "clothoidfit/errors.hpp"
#include "clothoidfit/fitter.hpp"

#include <cmath>

namespace clothoidfit {

ClothoidCurve::ClothoidCurve(double x0, double y0, double theta0, double kappa,
                             double kappa_prime, double length)
    : x0_(x0), y0_(y0), theta0_(theta0), kappa_(kappa), kappa_prime_(kappa_prime),
      length_(length)
{
    for (double v : {x0, y0, theta0, kappa, kappa_prime, length}) {
        if (!std::isfinite(v)) {
            throw DomainError("ClothoidCurve: parameters must be finite");
        }
    }
    if (!(length > 0.0)) {
        throw DomainError("ClothoidCurve: length must be positive");
    }
}

Point2 ClothoidCurve::point_at(double s, const EvalConfig& cfg) const
{
    if (!std::isfinite(s)) {
        throw DomainError("ClothoidCurve::point_at: abscissa is not finite");
    }
    if (s == 0.0) {
        return {x0_, y0_};
    }
    const XYValues xy = eval_xy({kappa_prime_ * s * s, kappa_ * s, theta0_, 1}, cfg);
    return {x0_ + s * xy.X[0], y0_ + s * xy.Y[0]};
}

double ClothoidCurve::angle_at(double s) const noexcept
{
    return theta0_ + s * (kappa_ + 0.5 * kappa_prime_ * s);
}

double ClothoidCurve::curvature_at(double s) const noexcept
{
    return kappa_ + kappa_prime_ * s;
}

std::vector<CurveSample> ClothoidCurve::sample(int n, const EvalConfig& cfg) const
{
    if (n < 2) {
        throw DomainError("ClothoidCurve::sample: need at least two samples");
    }
    std::vector<CurveSample> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Last abscissa is exactly L.
        const double s = i == n - 1 ? length_ : length_ * i / (n - 1);
        const Point2 p = point_at(s, cfg);
        rows.push_back({s, p.x, p.y, angle_at(s), curvature_at(s)});
    }
    return rows;
}

double endpoint_residual(const ClothoidCurve& curve, const HermiteData& data,
                         const EvalConfig& cfg)
{
    const Point2 end = curve.point_at(curve.length(), cfg);
    return std::hypot(end.x - data.x1, end.y - data.y1);
}

} // namespace clothoidfit
