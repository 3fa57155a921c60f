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

#include "clothoidfit/cli.hpp"

#include "clothoidfit/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

namespace clothoidfit::cli {
namespace {

constexpr double kPi = std::numbers::pi;

std::string fixed6(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::fixed, 6);
    return std::string(buf.data(), res.ptr);
}

nlohmann::ordered_json fit_json(const FitResult& fit)
{
    return nlohmann::ordered_json{
        {"kappa", fit.curve.kappa()},
        {"kappa_prime", fit.curve.kappa_prime()},
        {"L", fit.curve.length()},
        {"A", fit.A},
        {"iterations", fit.iterations},
        {"residual_g", fit.residual_g},
        {"endpoint_error", fit.endpoint_error},
    };
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string fit_record_json(const FitResult& fit)
{
    return fit_json(fit).dump(2);
}

std::string fit_record_csv(const FitResult& fit)
{
    std::string s = "kappa,kappa_prime,L,A,iterations,residual_g,endpoint_error\n";
    s += format_number(fit.curve.kappa()) + ',' + format_number(fit.curve.kappa_prime()) + ',' +
         format_number(fit.curve.length()) + ',' + format_number(fit.A) + ',' +
         std::to_string(fit.iterations) + ',' + format_number(fit.residual_g) + ',' +
         format_number(fit.endpoint_error) + '\n';
    return s;
}

void write_samples_csv(std::ostream& os, const std::vector<CurveSample>& rows)
{
    os << "s,x,y,theta,kappa\n";
    for (const CurveSample& r : rows) {
        os << format_number(r.s) << ',' << format_number(r.x) << ',' << format_number(r.y) << ','
           << format_number(r.theta) << ',' << format_number(r.kappa) << '\n';
    }
}

void write_samples_json(std::ostream& os, const std::vector<CurveSample>& rows)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CurveSample& r : rows) {
        arr.push_back({{"s", r.s}, {"x", r.x}, {"y", r.y}, {"theta", r.theta}, {"kappa", r.kappa}});
    }
    os << arr.dump(2) << '\n';
}

std::string render_svg(const std::vector<CurveSample>& rows, double width, double height)
{
    if (rows.empty()) {
        throw DomainError("render_svg: no samples");
    }
    if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
        throw DomainError("render_svg: viewport must be positive");
    }
    double xmin = rows.front().x;
    double xmax = xmin;
    double ymin = rows.front().y;
    double ymax = ymin;
    for (const CurveSample& r : rows) {
        xmin = std::min(xmin, r.x);
        xmax = std::max(xmax, r.x);
        ymin = std::min(ymin, r.y);
        ymax = std::max(ymax, r.y);
    }
    const double margin = 0.05 * std::min(width, height);
    const double avail_w = width - 2.0 * margin;
    const double avail_h = height - 2.0 * margin;
    const double span_x = xmax - xmin;
    const double span_y = ymax - ymin;
    double scale = std::numeric_limits<double>::infinity();
    if (span_x > 0.0) {
        scale = std::min(scale, avail_w / span_x);
    }
    if (span_y > 0.0) {
        scale = std::min(scale, avail_h / span_y);
    }
    if (!std::isfinite(scale)) {
        scale = 1.0;
    }
    // Center the drawing; SVG y grows downwards.
    const double off_x = margin + 0.5 * (avail_w - scale * span_x);
    const double off_y = margin + 0.5 * (avail_h - scale * span_y);
    auto map_x = [&](double x) { return off_x + scale * (x - xmin); };
    auto map_y = [&](double y) { return off_y + scale * (ymax - y); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed6(width)
       << "\" height=\"" << fixed6(height) << "\" viewBox=\"0 0 " << fixed6(width) << ' '
       << fixed6(height) << "\">\n"
       << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != 0) {
            os << ' ';
        }
        os << fixed6(map_x(rows[i].x)) << ',' << fixed6(map_y(rows[i].y));
    }
    os << "\"/>\n";
    const CurveSample& first = rows.front();
    const CurveSample& last = rows.back();
    os << "  <circle class=\"start\" cx=\"" << fixed6(map_x(first.x)) << "\" cy=\""
       << fixed6(map_y(first.y)) << "\" r=\"4\" fill=\"#2a9d3a\"/>\n"
       << "  <circle class=\"end\" cx=\"" << fixed6(map_x(last.x)) << "\" cy=\""
       << fixed6(map_y(last.y)) << "\" r=\"4\" fill=\"#c0392b\"/>\n"
       << "</svg>\n";
    return os.str();
}

std::vector<BenchCase> bench_cases()
{
    std::vector<BenchCase> cases = {
        {"test1", 0, {5, 4, kPi / 3, 5, 6, 7 * kPi / 6}, 5, 1e-12},
        {"test2", 0, {3, 5, 2.14676, 6, 5, 2.86234}, 5, 1e-12},
        {"test3", 0, {3, 6, 3.05433, 6, 6, 3.14159}, 5, 1e-12},
        {"test4", 0, {3, 6, 0.08727, 6, 6, 3.05433}, 5, 1e-12},
        {"test5", 0, {5, 4, 0.34907, 4, 5, 4.48550}, 5, 1e-12},
        {"test6", 0, {4, 4, 0.52360, 5, 5, 4.66003}, 5, 1e-12},
    };
    for (int k = 1; k <= 10; ++k) {
        const double scale = std::ldexp(1.0, -k);
        cases.push_back({"test7", k, {0, 0, 0.01 * scale, 100, 0, -0.02 * scale}, 4, 1e-12});
    }
    for (int k = 1; k <= 10; ++k) {
        const double scale = std::ldexp(1.0, -k);
        cases.push_back(
            {"test8", k, {0, -100, 0.00011 * scale, -100, 0, 1.5 * kPi - 0.0001 * scale}, 4, 1e-12});
    }
    return cases;
}

std::vector<BenchRow> run_bench(const FitConfig& cfg)
{
    std::vector<BenchRow> rows;
    for (const BenchCase& bc : bench_cases()) {
        BenchRow row;
        row.bench = bc;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const FitResult fit = build_clothoid(bc.data, cfg);
            row.seconds = seconds_since(t0);
            row.solved = true;
            row.iterations = fit.iterations;
            row.endpoint_error = fit.endpoint_error;
        } catch (const Error& e) {
            row.seconds = seconds_since(t0);
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double GridStats::fraction_at_most(int iterations) const noexcept
{
    long count = 0;
    for (const auto& [it, n] : histogram) {
        if (it <= iterations) {
            count += n;
        }
    }
    return cells() == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(cells());
}

GridStats grid_stats(int grid_n, double tol, GuessVariant guess, int threads)
{
    if (grid_n < 2) {
        throw DomainError("grid_stats: grid_n must be at least 2");
    }
    if (threads < 1) {
        throw DomainError("grid_stats: threads must be at least 1");
    }
    FitConfig cfg;
    cfg.tol = tol;
    cfg.guess = guess;
    cfg.validate();

    const double half_width = 0.9999 * kPi;
    // Mirrored so that angle(i) == -angle(grid_n - 1 - i) exactly.
    auto angle = [&](int i) {
        const int m = grid_n - 1;
        if (2 * i > m) {
            return half_width * (2.0 * i - m) / m;
        }
        return -half_width * (m - 2.0 * i) / m;
    };

    struct Partial {
        std::map<int, long> histogram;
        long failures = 0;
    };
    std::vector<Partial> partials(static_cast<std::size_t>(threads));
    std::atomic<int> next_row{0};
    auto worker = [&](Partial& part) {
        for (int i = next_row++; i < grid_n; i = next_row++) {
            for (int j = 0; j < grid_n; ++j) {
                ReducedProblem rp;
                rp.r = 1.0;
                rp.phi0 = angle(i);
                rp.phi1 = angle(j);
                rp.delta = rp.phi1 - rp.phi0;
                try {
                    ++part.histogram[solve_a(rp, cfg).iterations];
                } catch (const Error&) {
                    ++part.failures;
                }
            }
        }
    };

    const auto t0 = std::chrono::steady_clock::now();
    if (threads == 1) {
        worker(partials[0]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker, std::ref(partials[static_cast<std::size_t>(t)]));
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    GridStats stats;
    stats.grid_n = grid_n;
    stats.tol = tol;
    stats.guess = guess;
    for (const Partial& part : partials) {
        for (const auto& [it, n] : part.histogram) {
            stats.histogram[it] += n;
        }
        stats.failures += part.failures;
    }
    stats.max_iterations = stats.histogram.empty() ? 0 : stats.histogram.rbegin()->first;
    stats.seconds = seconds_since(t0);
    return stats;
}

} // namespace clothoidfit::cli
