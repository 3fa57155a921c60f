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

#include "clothoidfit/fitter.hpp"

#include "clothoidfit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace clothoidfit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExcludedAngleTol = 1e-12;
constexpr double kDerivativeFloor = 1e-30;
constexpr int kBracketSubintervals = 64;

struct GAndDerivative {
    double g;
    double dg;
};

GAndDerivative g_and_derivative(double A, const ReducedProblem& rp, const EvalConfig& cfg)
{
    const XYValues xy = eval_xy({2.0 * A, rp.delta - A, rp.phi0, 3}, cfg);
    return {xy.Y[0], xy.X[2] - xy.X[1]};
}

// Bisection on [lo, hi] with g(lo), g(hi) of opposite sign.
double bisect(double lo, double g_lo, double hi, const ReducedProblem& rp, const FitConfig& cfg,
              int& evaluations)
{
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = g_eval(mid, rp, cfg.eval);
        ++evaluations;
        if (std::fabs(g_mid) <= cfg.tol || mid == lo || mid == hi) {
            return mid;
        }
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Scans [-a_max, a_max] for sign changes of g, refines each by bisection and
// keeps the admissible root (h > 0) closest to `guess`.
std::optional<RootSolution> bracket_root(const ReducedProblem& rp, const FitConfig& cfg,
                                         double a_max, double guess, int evaluations)
{
    std::optional<RootSolution> best;
    double prev_a = -a_max;
    double prev_g = g_eval(prev_a, rp, cfg.eval);
    ++evaluations;
    for (int i = 1; i <= kBracketSubintervals; ++i) {
        const double a = -a_max + 2.0 * a_max * i / kBracketSubintervals;
        const double g = g_eval(a, rp, cfg.eval);
        ++evaluations;
        std::optional<double> root;
        if (std::fabs(prev_g) <= cfg.tol) {
            root = prev_a;
        } else if (std::fabs(g) <= cfg.tol) {
            root = a;
        } else if ((prev_g < 0.0) != (g < 0.0)) {
            root = bisect(prev_a, prev_g, a, rp, cfg, evaluations);
        }
        if (root && h_eval(*root, rp, cfg.eval) > 0.0 &&
            (!best || std::fabs(*root - guess) < std::fabs(best->A - guess))) {
            best = RootSolution{*root, evaluations, std::fabs(g_eval(*root, rp, cfg.eval)), true};
        }
        prev_a = a;
        prev_g = g;
    }
    if (best) {
        best->iterations = evaluations;
    }
    return best;
}

} // namespace

void FitConfig::validate() const
{
    if (!(tol > 0.0)) {
        throw DomainError("FitConfig: tol must be positive");
    }
    if (max_iter < 1) {
        throw DomainError("FitConfig: max_iter must be at least 1");
    }
    eval.validate();
}

double normalize_angle(double phi)
{
    if (!std::isfinite(phi)) {
        throw DomainError("normalize_angle: angle is not finite");
    }
    if (std::fabs(phi) > 1e6) {
        phi = std::remainder(phi, 2.0 * kPi);
    }
    while (phi > kPi) {
        phi -= 2.0 * kPi;
    }
    while (phi < -kPi) {
        phi += 2.0 * kPi;
    }
    return phi;
}

ReducedProblem reduce(const HermiteData& data)
{
    for (double v : {data.x0, data.y0, data.theta0, data.x1, data.y1, data.theta1}) {
        if (!std::isfinite(v)) {
            throw DomainError("reduce: Hermite data must be finite");
        }
    }
    const double dx = data.x1 - data.x0;
    const double dy = data.y1 - data.y0;
    ReducedProblem rp;
    rp.r = std::hypot(dx, dy);
    if (rp.r == 0.0) {
        throw DegenerateInputError("reduce: coincident endpoints");
    }
    rp.varphi = std::atan2(dy, dx);
    rp.phi0 = normalize_angle(data.theta0 - rp.varphi);
    rp.phi1 = normalize_angle(data.theta1 - rp.varphi);
    rp.delta = rp.phi1 - rp.phi0;
    return rp;
}

double g_eval(double A, const ReducedProblem& rp, const EvalConfig& cfg)
{
    return eval_xy({2.0 * A, rp.delta - A, rp.phi0, 1}, cfg).Y[0];
}

double g_prime(double A, const ReducedProblem& rp, const EvalConfig& cfg)
{
    return g_and_derivative(A, rp, cfg).dg;
}

double h_eval(double A, const ReducedProblem& rp, const EvalConfig& cfg)
{
    return eval_xy({2.0 * A, rp.delta - A, rp.phi0, 1}, cfg).X[0];
}

double initial_guess(double phi0, double phi1, GuessVariant variant,
                     const GuessCoefficients& coeffs)
{
    const double sum = phi0 + phi1;
    const double p0 = phi0 / kPi;
    const double p1 = phi1 / kPi;
    const double prod = p0 * p1;
    const double sq = p0 * p0 + p1 * p1;
    switch (variant) {
    case GuessVariant::linear:
        return 3.0 * sum;
    case GuessVariant::cubic: {
        const auto& c = coeffs.c;
        return sum * (c[0] + c[1] * prod + c[2] * sq);
    }
    case GuessVariant::quintic: {
        const auto& d = coeffs.d;
        const double quartic = p0 * p0 * p0 * p0 + p1 * p1 * p1 * p1;
        return sum * (d[0] + prod * (d[1] + d[2] * prod) + sq * (d[3] + d[4] * prod) +
                      d[5] * quartic);
    }
    }
    return 3.0 * sum;
}

double a_max_bound(double phi0, double phi1)
{
    if (!std::isfinite(phi0) || !std::isfinite(phi1)) {
        throw DomainError("a_max_bound: angles must be finite");
    }
    if (std::fabs(phi0) >= kPi - kExcludedAngleTol && std::fabs(phi1) >= kPi - kExcludedAngleTol &&
        (phi0 < 0.0) != (phi1 < 0.0)) {
        throw ExcludedConfigurationError(
            "a_max_bound: phi0 = -phi1 = +-pi has no finite-length solution");
    }
    const double delta = std::fabs(phi1 - phi0);
    // Reversal and mirroring map (phi0, phi1) onto |phi0'| <= phi1' with
    // phi1' = max(|phi0|, |phi1|); only the image of the smaller angle enters.
    const bool end_dominates = std::fabs(phi1) >= std::fabs(phi0);
    const double big = end_dominates ? phi1 : phi0;
    const double small = end_dominates ? phi0 : phi1;
    const double phi0_reduced = big < 0.0 ? -small : small;
    const double theta_max = std::max(0.0, 0.5 * kPi + phi0_reduced);
    if (theta_max == 0.0) {
        return delta;
    }
    // delta + 2 theta (1 + sqrt(1 + delta/theta)) without the division.
    return delta + 2.0 * theta_max + 2.0 * std::sqrt(theta_max * (theta_max + delta));
}

RootSolution solve_a(const ReducedProblem& rp, const FitConfig& cfg)
{
    const double a_max = a_max_bound(rp.phi0, rp.phi1);
    const double guess = initial_guess(rp.phi0, rp.phi1, cfg.guess);
    const double admissible = a_max + 1e-9;

    double A = guess;
    int evaluations = 0;
    bool need_bracket = false;
    bool singular = false;
    while (true) {
        const GAndDerivative gd = g_and_derivative(A, rp, cfg.eval);
        ++evaluations;
        if (std::fabs(gd.g) <= cfg.tol) {
            if (std::fabs(A) <= admissible && h_eval(A, rp, cfg.eval) > 0.0) {
                // One more step with the derivative already at hand; the
                // endpoint error scales like |g| / h, which tol alone does
                // not bound.
                if (gd.g != 0.0 && std::fabs(gd.dg) >= kDerivativeFloor) {
                    const double polished = A - gd.g / gd.dg;
                    const double g_polished = g_eval(polished, rp, cfg.eval);
                    if (std::fabs(g_polished) <= std::fabs(gd.g)) {
                        return {polished, evaluations, std::fabs(g_polished), false};
                    }
                }
                return {A, evaluations, std::fabs(gd.g), false};
            }
            need_bracket = true;
            break;
        }
        if (evaluations > cfg.max_iter) {
            throw ConvergenceError("solve_a: Newton did not converge within max_iter", A,
                                   evaluations - 1);
        }
        if (std::fabs(gd.dg) < kDerivativeFloor) {
            need_bracket = true;
            singular = true;
            break;
        }
        A -= gd.g / gd.dg;
        if (!std::isfinite(A) || std::fabs(A) > 2.0 * a_max) {
            need_bracket = true;
            break;
        }
    }

    if (need_bracket) {
        if (auto root = bracket_root(rp, cfg, a_max, guess, evaluations)) {
            return *root;
        }
    }
    if (singular) {
        throw SingularDerivativeError("solve_a: g'(A) vanished and no root was bracketed", A,
                                      evaluations);
    }
    throw ConvergenceError("solve_a: no admissible root in [-A_max, A_max]", A, evaluations);
}

FitResult build_clothoid(const HermiteData& data, const FitConfig& cfg)
{
    cfg.validate();
    const ReducedProblem rp = reduce(data);
    const RootSolution root = solve_a(rp, cfg);
    const double h = h_eval(root.A, rp, cfg.eval);
    if (!(h > 0.0)) {
        throw ConsistencyError("build_clothoid: h(A) <= 0 at the computed root");
    }
    const double length = rp.r / h;
    const double B = rp.delta - root.A;
    const double kappa = B / length;
    const double kappa_prime = 2.0 * root.A / (length * length);
    ClothoidCurve curve(data.x0, data.y0, data.theta0, kappa, kappa_prime, length);
    const double error = endpoint_residual(curve, data, cfg.eval);
    return FitResult{curve, root.A, B, root.iterations, root.residual, error, root.bracketed};
}

std::string_view to_string(GuessVariant variant) noexcept
{
    switch (variant) {
    case GuessVariant::linear:
        return "linear";
    case GuessVariant::cubic:
        return "cubic";
    case GuessVariant::quintic:
        return "quintic";
    }
    return "quintic";
}

GuessVariant parse_guess_variant(std::string_view name)
{
    if (name == "linear") {
        return GuessVariant::linear;
    }
    if (name == "cubic") {
        return GuessVariant::cubic;
    }
    if (name == "quintic") {
        return GuessVariant::quintic;
    }
    throw DomainError("unknown guess variant: " + std::string(name));
}

} // namespace clothoidfit
