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

#include "clothoidfit/errors.hpp"
#include "clothoidfit/fitter.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace clothoidfit {
namespace {

constexpr double kPi = std::numbers::pi;

ReducedProblem make_problem(double phi0, double phi1)
{
    ReducedProblem rp;
    rp.r = 1.0;
    rp.phi0 = phi0;
    rp.phi1 = phi1;
    rp.delta = phi1 - phi0;
    return rp;
}

double quad_g(double A, const ReducedProblem& rp)
{
    return static_cast<double>(oracle::gen_y(2.0L * A, rp.delta - A, rp.phi0, 0));
}

double quad_h(double A, const ReducedProblem& rp)
{
    return static_cast<double>(oracle::gen_x(2.0L * A, rp.delta - A, rp.phi0, 0));
}

// Reference bound: reduce to |phi0| <= phi1 by explicit case analysis of the
// four reversal/mirror images, then apply the formula.
double reference_a_max(double phi0, double phi1)
{
    const double delta = std::fabs(phi1 - phi0);
    double start = phi0;
    if (std::fabs(phi1) >= std::fabs(phi0)) {
        start = phi1 >= 0.0 ? phi0 : -phi0; // identity or mirror
    } else {
        start = phi0 < 0.0 ? -phi1 : phi1; // reversal or reversal + mirror
    }
    const double theta = std::max(0.0, kPi / 2 + start);
    if (theta == 0.0) {
        return delta;
    }
    return delta + 2 * theta * (1 + std::sqrt(1 + delta / theta));
}

// Sign-change scan plus bisection on the quadrature g; keeps the root with
// positive h nearest to `guess`.
double bisection_root(const ReducedProblem& rp, double a_max, double guess)
{
    const int cells = 400;
    double best = std::numeric_limits<double>::quiet_NaN();
    double lo = -a_max;
    double g_lo = quad_g(lo, rp);
    for (int i = 1; i <= cells; ++i) {
        const double hi = -a_max + 2 * a_max * i / cells;
        const double g_hi = quad_g(hi, rp);
        if ((g_lo < 0) != (g_hi < 0) || g_lo == 0.0) {
            double a = lo;
            double b = hi;
            double ga = g_lo;
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (a + b);
                const double gm = quad_g(m, rp);
                if ((gm < 0) == (ga < 0)) {
                    a = m;
                    ga = gm;
                } else {
                    b = m;
                }
            }
            const double root = 0.5 * (a + b);
            if (quad_h(root, rp) > 0.0 && (std::isnan(best) || std::fabs(root - guess) < std::fabs(best - guess))) {
                best = root;
            }
        }
        lo = hi;
        g_lo = g_hi;
    }
    return best;
}

TEST(NormalizeAngle, Examples)
{
    EXPECT_EQ(normalize_angle(0.0), 0.0);
    EXPECT_NEAR(normalize_angle(3 * kPi / 2), -kPi / 2, 1e-15);
    EXPECT_NEAR(normalize_angle(-3 * kPi), -kPi, 1e-15);
    EXPECT_GE(normalize_angle(-3 * kPi), -kPi - 1e-15);
    EXPECT_EQ(normalize_angle(kPi), kPi);
    EXPECT_EQ(normalize_angle(-kPi), -kPi);
}

TEST(NormalizeAngle, RangeAndCongruence)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-200.0, 200.0);
    for (int i = 0; i < 1000; ++i) {
        const double phi = dist(rng);
        const double n = normalize_angle(phi);
        EXPECT_LE(std::fabs(n), kPi);
        const double turns = (phi - n) / (2 * kPi);
        EXPECT_NEAR(turns, std::round(turns), 1e-12);
    }
    EXPECT_LE(std::fabs(normalize_angle(1e12)), kPi);
    EXPECT_THROW(normalize_angle(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(Reduce, UnitChord)
{
    const ReducedProblem rp = reduce({0, 0, 0, 1, 0, 0});
    EXPECT_EQ(rp.r, 1.0);
    EXPECT_EQ(rp.varphi, 0.0);
    EXPECT_EQ(rp.phi0, 0.0);
    EXPECT_EQ(rp.phi1, 0.0);
    EXPECT_EQ(rp.delta, 0.0);
}

TEST(Reduce, FirstBenchmarkCase)
{
    const ReducedProblem rp = reduce({5, 4, kPi / 3, 5, 6, 7 * kPi / 6});
    EXPECT_DOUBLE_EQ(rp.r, 2.0);
    EXPECT_DOUBLE_EQ(rp.varphi, kPi / 2);
    EXPECT_NEAR(rp.phi0, -kPi / 6, 1e-15);
    EXPECT_NEAR(rp.phi1, 2 * kPi / 3, 1e-15);
    EXPECT_EQ(rp.delta, rp.phi1 - rp.phi0);
}

TEST(Reduce, CoincidentEndpointsAreDegenerate)
{
    EXPECT_THROW(reduce({1, 1, 0.3, 1, 1, 2.0}), DegenerateInputError);
    EXPECT_THROW(reduce({0, 0, std::numeric_limits<double>::quiet_NaN(), 1, 0, 0}), DomainError);
}

TEST(GEval, Examples)
{
    EXPECT_EQ(g_eval(0.0, make_problem(0.0, 0.0)), 0.0);
    for (double phi : {0.3, -1.2, 2.9, -3.1}) {
        EXPECT_NEAR(g_eval(0.0, make_problem(phi, -phi)), 0.0, 1e-15) << phi;
    }
    const ReducedProblem rp = make_problem(0.1, 0.3);
    EXPECT_NEAR(g_eval(1.0, rp), quad_g(1.0, rp), 1e-12);
}

TEST(GPrime, Examples)
{
    EXPECT_NEAR(g_prime(0.0, make_problem(0.0, 0.0)), -1.0 / 6.0, 1e-15);
    const ReducedProblem rp = make_problem(-0.5, 0.5);
    const double x1 = static_cast<double>(oracle::gen_x(0.0L, rp.delta, rp.phi0, 1));
    const double x2 = static_cast<double>(oracle::gen_x(0.0L, rp.delta, rp.phi0, 2));
    EXPECT_NEAR(g_prime(0.0, rp), x2 - x1, 1e-13);
}

TEST(GPrime, MatchesFiniteDifferences)
{
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> dphi(-kPi, kPi);
    std::uniform_real_distribution<double> dA(-20.0, 20.0);
    for (int i = 0; i < 300; ++i) {
        const ReducedProblem rp = make_problem(dphi(rng), dphi(rng));
        const double A = dA(rng) * (i % 5 == 0 ? 1e-3 : 1.0);
        const double h = 1e-6 * std::max(1.0, std::fabs(A));
        const double fd = (g_eval(A + h, rp) - g_eval(A - h, rp)) / (2 * h);
        const double exact = g_prime(A, rp);
        EXPECT_NEAR(exact, fd, 1e-6 * std::max(std::fabs(exact), 1e-3))
            << "A = " << A << " phi0 = " << rp.phi0 << " phi1 = " << rp.phi1;
    }
}

TEST(HEval, Examples)
{
    EXPECT_DOUBLE_EQ(h_eval(0.0, make_problem(0.0, 0.0)), 1.0);
    EXPECT_NEAR(h_eval(0.0, make_problem(-kPi / 2, kPi / 2)), 2.0 / kPi, 1e-15);
    const ReducedProblem rp = make_problem(0.7, -2.2);
    EXPECT_NEAR(h_eval(3.3, rp), quad_h(3.3, rp), 1e-12);
}

TEST(Symmetry, ReversalAndMirror)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dphi(-kPi, kPi);
    std::uniform_real_distribution<double> dA(-15.0, 15.0);
    for (int i = 0; i < 300; ++i) {
        const double phi0 = dphi(rng);
        const double phi1 = dphi(rng);
        const double A = dA(rng);
        const ReducedProblem rp = make_problem(phi0, phi1);
        const ReducedProblem rev = make_problem(-phi1, -phi0);
        const ReducedProblem mir = make_problem(-phi0, -phi1);
        EXPECT_NEAR(g_eval(A, rp), -g_eval(-A, rev), 1e-12);
        EXPECT_NEAR(g_eval(A, rp), -g_eval(-A, mir), 1e-12);
        EXPECT_NEAR(h_eval(A, rp), h_eval(-A, rev), 1e-12);
        EXPECT_NEAR(h_eval(A, rp), h_eval(-A, mir), 1e-12);
    }
}

TEST(InitialGuess, Examples)
{
    EXPECT_EQ(initial_guess(0.0, 0.0, GuessVariant::linear), 0.0);
    EXPECT_NEAR(initial_guess(0.1, 0.2, GuessVariant::linear), 0.9, 1e-15);
    const GuessCoefficients k;
    EXPECT_NEAR(initial_guess(kPi / 2, kPi / 2, GuessVariant::cubic),
                kPi * (k.c[0] + k.c[1] / 4 + k.c[2] / 2), 1e-14);
    // phi0 = phi1 = pi/2: quadratic terms 1/4, 1/2; quartic 1/8.
    const double quintic = kPi * (k.d[0] + 0.25 * (k.d[1] + 0.25 * k.d[2]) +
                                  0.5 * (k.d[3] + 0.25 * k.d[4]) + 0.125 * k.d[5]);
    EXPECT_NEAR(initial_guess(kPi / 2, kPi / 2, GuessVariant::quintic), quintic, 1e-14);
}

TEST(InitialGuess, OddUnderNegationAndZeroOnAntidiagonal)
{
    for (GuessVariant v : {GuessVariant::linear, GuessVariant::cubic, GuessVariant::quintic}) {
        EXPECT_EQ(initial_guess(0.4, -0.4, v), 0.0);
        EXPECT_DOUBLE_EQ(initial_guess(-0.3, -1.1, v), -initial_guess(0.3, 1.1, v));
        EXPECT_DOUBLE_EQ(initial_guess(0.3, 1.1, v), initial_guess(1.1, 0.3, v));
    }
}

TEST(GuessVariantNames, RoundTrip)
{
    for (GuessVariant v : {GuessVariant::linear, GuessVariant::cubic, GuessVariant::quintic}) {
        EXPECT_EQ(parse_guess_variant(to_string(v)), v);
    }
    EXPECT_THROW(parse_guess_variant("septic"), DomainError);
}

TEST(AMaxBound, Examples)
{
    EXPECT_NEAR(a_max_bound(0.0, kPi), kPi * (2 + std::sqrt(3.0)), 1e-14);
    EXPECT_NEAR(a_max_bound(-kPi / 2, kPi / 2), kPi, 1e-15);
    EXPECT_THROW(a_max_bound(kPi, -kPi), ExcludedConfigurationError);
    EXPECT_THROW(a_max_bound(-kPi, kPi), ExcludedConfigurationError);
    EXPECT_NO_THROW(a_max_bound(kPi, kPi));
}

TEST(AMaxBound, InvariantUnderReversalAndMirror)
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dphi(-kPi + 1e-6, kPi - 1e-6);
    for (int i = 0; i < 500; ++i) {
        const double phi0 = dphi(rng);
        const double phi1 = dphi(rng);
        const double bound = a_max_bound(phi0, phi1);
        EXPECT_DOUBLE_EQ(a_max_bound(-phi1, -phi0), bound);
        EXPECT_DOUBLE_EQ(a_max_bound(-phi0, -phi1), bound);
        EXPECT_DOUBLE_EQ(a_max_bound(phi1, phi0), bound);
    }
}

TEST(AMaxBound, MatchesFormula)
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> dphi(-kPi + 1e-6, kPi - 1e-6);
    for (int i = 0; i < 500; ++i) {
        const double phi0 = dphi(rng);
        const double phi1 = dphi(rng);
        EXPECT_NEAR(a_max_bound(phi0, phi1), reference_a_max(phi0, phi1),
                    1e-13 * reference_a_max(phi0, phi1));
    }
}

TEST(SolveA, TrivialAndSpecialCases)
{
    const RootSolution line = solve_a(make_problem(0.0, 0.0));
    EXPECT_EQ(line.A, 0.0);
    EXPECT_LE(line.iterations, 1);
    const RootSolution circle = solve_a(make_problem(-0.4, 0.4));
    EXPECT_LE(std::fabs(circle.A), 1e-10);
}

TEST(SolveA, AgreesWithBisectionOracle)
{
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> dphi(-0.999 * kPi, 0.999 * kPi);
    for (int i = 0; i < 12; ++i) {
        const ReducedProblem rp = make_problem(dphi(rng), dphi(rng));
        const double a_max = reference_a_max(rp.phi0, rp.phi1);
        const double guess = initial_guess(rp.phi0, rp.phi1, GuessVariant::quintic);
        const double expected = bisection_root(rp, a_max, guess);
        const RootSolution sol = solve_a(rp);
        EXPECT_NEAR(sol.A, expected, 1e-8) << "phi0 = " << rp.phi0 << " phi1 = " << rp.phi1;
        EXPECT_LE(std::fabs(sol.A), a_max_bound(rp.phi0, rp.phi1) + 1e-9);
        EXPECT_LE(std::fabs(g_eval(sol.A, rp)), 1e-12);
    }
}

TEST(SolveA, AllVariantsReachTheSameRoot)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> dphi(-0.9999 * kPi, 0.9999 * kPi);
    for (int i = 0; i < 400; ++i) {
        const ReducedProblem rp = make_problem(dphi(rng), dphi(rng));
        FitConfig cfg;
        cfg.guess = GuessVariant::quintic;
        const RootSolution q = solve_a(rp, cfg);
        cfg.guess = GuessVariant::cubic;
        const RootSolution c = solve_a(rp, cfg);
        cfg.guess = GuessVariant::linear;
        const RootSolution l = solve_a(rp, cfg);
        EXPECT_NEAR(q.A, c.A, 1e-9 * std::max(1.0, std::fabs(q.A)));
        EXPECT_NEAR(q.A, l.A, 1e-9 * std::max(1.0, std::fabs(q.A)));
        EXPECT_LE(std::fabs(q.A), a_max_bound(rp.phi0, rp.phi1) + 1e-9);
        EXPECT_GT(h_eval(q.A, rp), 0.0);
        EXPECT_LE(q.iterations, 4);
        EXPECT_FALSE(q.bracketed);
    }
}

TEST(SolveA, IterationCapRaisesConvergenceError)
{
    FitConfig cfg;
    cfg.max_iter = 1;
    cfg.guess = GuessVariant::linear;
    try {
        solve_a(make_problem(0.3, 2.5), cfg);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_TRUE(std::isfinite(e.last_iterate()));
        EXPECT_EQ(e.iterations(), 1);
    }
}

TEST(FitConfig, Validation)
{
    FitConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.tol = 0.0;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = FitConfig{};
    cfg.max_iter = 0;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = FitConfig{};
    cfg.eval.epsilon_a = 0.5;
    EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(BuildClothoid, StraightLine)
{
    const FitResult fit = build_clothoid({0, 0, 0, 1, 0, 0});
    EXPECT_EQ(fit.curve.kappa(), 0.0);
    EXPECT_EQ(fit.curve.kappa_prime(), 0.0);
    EXPECT_EQ(fit.curve.length(), 1.0);
    EXPECT_LE(fit.endpoint_error, 1e-15);
}

TEST(BuildClothoid, Semicircle)
{
    const FitResult fit = build_clothoid({0, 0, kPi / 2, 2, 0, -kPi / 2});
    EXPECT_NEAR(fit.curve.length(), kPi, 1e-14);
    EXPECT_NEAR(fit.curve.kappa(), -1.0, 1e-14);
    EXPECT_NEAR(fit.curve.kappa_prime(), 0.0, 1e-14);
    EXPECT_LE(fit.endpoint_error, 1e-14);
}

TEST(BuildClothoid, FirstBenchmarkCase)
{
    const FitResult fit = build_clothoid({5, 4, kPi / 3, 5, 6, 7 * kPi / 6});
    EXPECT_LE(fit.iterations, 5);
    EXPECT_LE(fit.endpoint_error, 1e-12);
    EXPECT_LE(fit.residual_g, 1e-12);
    EXPECT_DOUBLE_EQ(fit.B, (7 * kPi / 6 - kPi / 2) - (kPi / 3 - kPi / 2) - fit.A);
}

TEST(BuildClothoid, ExcludedAndDegenerateInputs)
{
    // phi0 = pi, phi1 = -pi relative to the chord along +x.
    EXPECT_THROW(build_clothoid({0, 0, kPi, 1, 0, -kPi}), ExcludedConfigurationError);
    EXPECT_THROW(build_clothoid({2, 2, 0, 2, 2, 1}), DegenerateInputError);
}

TEST(BuildClothoid, EndpointIdentityOnRandomData)
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> dxy(-50.0, 50.0);
    std::uniform_real_distribution<double> dphi(-0.99 * kPi, 0.99 * kPi);
    for (int i = 0; i < 300; ++i) {
        HermiteData d{dxy(rng), dxy(rng), 0.0, dxy(rng), dxy(rng), 0.0};
        const double chord = std::atan2(d.y1 - d.y0, d.x1 - d.x0);
        d.theta0 = chord + dphi(rng);
        d.theta1 = chord + dphi(rng);
        const double r = std::hypot(d.x1 - d.x0, d.y1 - d.y0);
        const FitResult fit = build_clothoid(d);
        const Point2 end = fit.curve.point_at(fit.curve.length());
        EXPECT_NEAR(end.x, d.x1, 1e-10 * r);
        EXPECT_NEAR(end.y, d.y1, 1e-10 * r);
        const double turn = fit.curve.angle_at(fit.curve.length()) - d.theta1;
        EXPECT_NEAR(std::remainder(turn, 2 * kPi), 0.0, 1e-10);
        EXPECT_GT(fit.curve.length(), 0.0);
        EXPECT_LE(fit.endpoint_error, 1e-12 * std::max(1.0, r));
    }
}

TEST(BuildClothoid, RigidMotionAndScaling)
{
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> dxy(-5.0, 5.0);
    std::uniform_real_distribution<double> dphi(-0.98 * kPi, 0.98 * kPi);
    std::uniform_real_distribution<double> drot(-kPi, kPi);
    for (int i = 0; i < 200; ++i) {
        HermiteData d{dxy(rng), dxy(rng), 0.0, dxy(rng), dxy(rng), 0.0};
        const double chord = std::atan2(d.y1 - d.y0, d.x1 - d.x0);
        d.theta0 = chord + dphi(rng);
        d.theta1 = chord + dphi(rng);
        const FitResult base = build_clothoid(d);

        const double rot = drot(rng);
        const double tx = dxy(rng);
        const double ty = dxy(rng);
        auto move = [&](double x, double y, double& ox, double& oy) {
            ox = std::cos(rot) * x - std::sin(rot) * y + tx;
            oy = std::sin(rot) * x + std::cos(rot) * y + ty;
        };
        HermiteData m = d;
        move(d.x0, d.y0, m.x0, m.y0);
        move(d.x1, d.y1, m.x1, m.y1);
        m.theta0 += rot;
        m.theta1 += rot;
        const FitResult moved = build_clothoid(m);
        EXPECT_NEAR(moved.curve.kappa(), base.curve.kappa(), 1e-10);
        EXPECT_NEAR(moved.curve.kappa_prime(), base.curve.kappa_prime(), 1e-10);
        EXPECT_NEAR(moved.curve.length(), base.curve.length(), 1e-10);
        EXPECT_NEAR(moved.A, base.A, 1e-10);
        EXPECT_EQ(moved.iterations, base.iterations);

        const double lambda = 7.5;
        HermiteData s = d;
        s.x0 *= lambda;
        s.y0 *= lambda;
        s.x1 *= lambda;
        s.y1 *= lambda;
        const FitResult scaled = build_clothoid(s);
        EXPECT_NEAR(scaled.curve.length(), lambda * base.curve.length(),
                    1e-12 * lambda * base.curve.length());
        EXPECT_NEAR(scaled.curve.kappa(), base.curve.kappa() / lambda,
                    1e-10 * std::max(1.0, std::fabs(base.curve.kappa())));
        EXPECT_NEAR(scaled.curve.kappa_prime(), base.curve.kappa_prime() / (lambda * lambda),
                    1e-10 * std::max(1.0, std::fabs(base.curve.kappa_prime())));
    }
}

TEST(BuildClothoid, AntidiagonalGivesCircularArcs)
{
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> dphi(-0.999 * kPi, 0.999 * kPi);
    for (int i = 0; i < 100; ++i) {
        const double phi = dphi(rng);
        const FitResult fit = build_clothoid({0, 0, phi, 3, 0, -phi});
        EXPECT_LE(std::fabs(fit.A), 1e-9);
        const double L = fit.curve.length();
        EXPECT_LE(std::fabs(fit.curve.kappa_prime()) * L * L, 1e-8);
    }
}

} // namespace
} // namespace clothoidfit
