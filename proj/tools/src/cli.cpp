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

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace clothoidfit::cli {
namespace {

struct FitOptions {
    HermiteData data;
    std::string input;
    double tol = FitConfig{}.tol;
    int max_iter = FitConfig{}.max_iter;
    std::string guess = "quintic";
};

struct Options {
    FitOptions fit;
    int n = 100;
    std::string format;
    std::string out;
    double width = 800.0;
    double height = 600.0;
    bool full_grid = false;
    int grid_n = 256;
    int threads = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_fit_options(CLI::App* cmd, FitOptions& f)
{
    cmd->add_option("--x0", f.data.x0, "start x");
    cmd->add_option("--y0", f.data.y0, "start y");
    cmd->add_option("--theta0", f.data.theta0, "start tangent angle (radians)");
    cmd->add_option("--x1", f.data.x1, "end x");
    cmd->add_option("--y1", f.data.y1, "end y");
    cmd->add_option("--theta1", f.data.theta1, "end tangent angle (radians)");
    cmd->add_option("--input", f.input,
                    "JSON file with x0, y0, theta0, x1, y1, theta1 (overrides the flags)");
    cmd->add_option("--tol", f.tol, "Newton tolerance on |g(A)|")->capture_default_str();
    cmd->add_option("--max-iter", f.max_iter, "Newton iteration limit")->capture_default_str();
    cmd->add_option("--guess", f.guess, "initial guess")
        ->check(CLI::IsMember({"linear", "cubic", "quintic"}))
        ->capture_default_str();
}

void add_out_option(CLI::App* cmd, Options& o)
{
    cmd->add_option("--out", o.out, "write to this file instead of standard output");
}

HermiteData load_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open input file " + path);
    }
    try {
        const nlohmann::ordered_json j = nlohmann::ordered_json::parse(in);
        return HermiteData{j.at("x0").get<double>(),     j.at("y0").get<double>(),
                           j.at("theta0").get<double>(), j.at("x1").get<double>(),
                           j.at("y1").get<double>(),     j.at("theta1").get<double>()};
    } catch (const nlohmann::ordered_json::exception& e) {
        throw UsageError("bad input file " + path + ": " + e.what());
    }
}

FitConfig make_config(const FitOptions& f)
{
    if (!std::isfinite(f.tol) || !(f.tol > 0.0)) {
        throw UsageError("--tol must be a positive finite number");
    }
    if (f.max_iter < 1) {
        throw UsageError("--max-iter must be at least 1");
    }
    FitConfig cfg;
    cfg.tol = f.tol;
    cfg.max_iter = f.max_iter;
    cfg.guess = parse_guess_variant(f.guess);
    return cfg;
}

HermiteData make_data(const FitOptions& f)
{
    const HermiteData d = f.input.empty() ? f.data : load_input(f.input);
    for (double v : {d.x0, d.y0, d.theta0, d.x1, d.y1, d.theta1}) {
        if (!std::isfinite(v)) {
            throw UsageError("Hermite data must be finite");
        }
    }
    return d;
}

int cmd_fit(const Options& o, std::ostream& out)
{
    const FitResult fit = build_clothoid(make_data(o.fit), make_config(o.fit));
    if (o.format == "csv") {
        out << fit_record_csv(fit);
    } else {
        out << fit_record_json(fit) << '\n';
    }
    return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out)
{
    if (o.n < 2) {
        throw UsageError("--n must be at least 2");
    }
    const FitConfig cfg = make_config(o.fit);
    const FitResult fit = build_clothoid(make_data(o.fit), cfg);
    const std::vector<CurveSample> rows = fit.curve.sample(o.n, cfg.eval);
    if (o.format == "json") {
        write_samples_json(out, rows);
    } else {
        write_samples_csv(out, rows);
    }
    return kExitOk;
}

int cmd_svg(const Options& o, std::ostream& out)
{
    if (o.n < 2) {
        throw UsageError("--n must be at least 2");
    }
    if (!std::isfinite(o.width) || !std::isfinite(o.height) || !(o.width > 0.0) ||
        !(o.height > 0.0)) {
        throw UsageError("--width and --height must be positive");
    }
    const FitConfig cfg = make_config(o.fit);
    const FitResult fit = build_clothoid(make_data(o.fit), cfg);
    out << render_svg(fit.curve.sample(o.n, cfg.eval), o.width, o.height);
    return kExitOk;
}

void print_grid_text(std::ostream& out, const GridStats& g)
{
    out << "grid " << g.grid_n << 'x' << g.grid_n << ", tol " << format_number(g.tol)
        << ", guess " << to_string(g.guess) << '\n';
    out << "iterations  cells      share\n";
    for (const auto& [it, n] : g.histogram) {
        out << std::setw(10) << it << "  " << std::setw(9) << n << "  " << std::fixed
            << std::setprecision(2) << std::setw(6)
            << 100.0 * static_cast<double>(n) / static_cast<double>(g.cells()) << "%\n";
        out.unsetf(std::ios::floatfield);
    }
    out << "max iterations " << g.max_iterations << ", failures " << g.failures << ", "
        << std::fixed << std::setprecision(2) << g.seconds << " s\n";
    out.unsetf(std::ios::floatfield);
    out << std::setprecision(6);
}

nlohmann::ordered_json grid_json(const GridStats& g)
{
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [it, n] : g.histogram) {
        hist[std::to_string(it)] = n;
    }
    return {{"grid_n", g.grid_n},
            {"tol", g.tol},
            {"guess", std::string(to_string(g.guess))},
            {"histogram", hist},
            {"max_iterations", g.max_iterations},
            {"failures", g.failures},
            {"seconds", g.seconds}};
}

int cmd_bench(const Options& o, std::ostream& out)
{
    const FitConfig cfg = make_config(o.fit);
    const std::vector<BenchRow> rows = run_bench(cfg);
    int flagged = 0;
    for (const BenchRow& r : rows) {
        flagged += r.within_limits() ? 0 : 1;
    }
    std::vector<GridStats> grids;
    if (o.full_grid) {
        for (GuessVariant v : {GuessVariant::linear, GuessVariant::cubic, GuessVariant::quintic}) {
            grids.push_back(grid_stats(1025, 1e-10, v, o.threads));
        }
    }

    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["cases"] = nlohmann::ordered_json::array();
        for (const BenchRow& r : rows) {
            nlohmann::ordered_json c = {{"case", r.bench.name},
                                {"k", r.bench.k},
                                {"solved", r.solved},
                                {"iterations", r.iterations},
                                {"endpoint_error", r.endpoint_error},
                                {"seconds", r.seconds},
                                {"within_limits", r.within_limits()}};
            if (!r.error.empty()) {
                c["error"] = r.error;
            }
            j["cases"].push_back(c);
        }
        j["flagged"] = flagged;
        if (!grids.empty()) {
            j["grids"] = nlohmann::ordered_json::array();
            for (const GridStats& g : grids) {
                j["grids"].push_back(grid_json(g));
            }
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }

    out << "case    k   iter  limit  endpoint_error           time_us  status\n";
    for (const BenchRow& r : rows) {
        out << std::left << std::setw(6) << r.bench.name << std::right << std::setw(3)
            << (r.bench.k == 0 ? std::string("-") : std::to_string(r.bench.k)) << std::setw(7)
            << r.iterations << std::setw(7) << r.bench.max_iterations << "  " << std::left
            << std::setw(23) << format_number(r.endpoint_error) << std::right << std::setw(9)
            << std::fixed << std::setprecision(1) << r.seconds * 1e6 << "  ";
        out.unsetf(std::ios::floatfield);
        out << std::setprecision(6);
        if (!r.solved) {
            out << "FAIL (" << r.error << ")\n";
        } else {
            out << (r.within_limits() ? "ok" : "FAIL") << '\n';
        }
    }
    if (flagged == 0) {
        out << "all " << rows.size() << " cases within limits\n";
    } else {
        out << flagged << " of " << rows.size() << " cases exceed limits\n";
    }
    for (const GridStats& g : grids) {
        out << '\n';
        print_grid_text(out, g);
    }
    return kExitOk;
}

int cmd_grid_stats(const Options& o, std::ostream& out)
{
    if (o.grid_n < 2) {
        throw UsageError("--grid-n must be at least 2");
    }
    if (o.threads < 1) {
        throw UsageError("--threads must be at least 1");
    }
    const FitConfig cfg = make_config(o.fit);
    const GridStats g = grid_stats(o.grid_n, cfg.tol, cfg.guess, o.threads);
    if (o.format == "json") {
        out << grid_json(g).dump(2) << '\n';
    } else {
        print_grid_text(out, g);
    }
    return kExitOk;
}

int write_output(const std::string& path, const std::string& text, std::ostream& out,
                 std::ostream& err)
{
    if (path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << path << " for writing\n";
        return kExitFailure;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: failed writing " << path << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fit a clothoid segment to two points with tangent angles.", "clothoidfit"};
    app.require_subcommand(1);
    Options o;

    CLI::App* fit = app.add_subcommand("fit", "fit and print kappa, kappa', L and solver data");
    add_fit_options(fit, o.fit);
    fit->add_option("--format", o.format, "csv or json (default json)")
        ->check(CLI::IsMember({"csv", "json"}));
    add_out_option(fit, o);

    CLI::App* sample = app.add_subcommand("sample", "fit, then sample s,x,y,theta,kappa rows");
    add_fit_options(sample, o.fit);
    sample->add_option("--n", o.n, "number of samples (>= 2)")->capture_default_str();
    sample->add_option("--format", o.format, "csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    add_out_option(sample, o);

    CLI::App* svg = app.add_subcommand("svg", "fit, then draw the curve as SVG");
    add_fit_options(svg, o.fit);
    svg->add_option("--n", o.n, "number of polyline vertices (>= 2)")->capture_default_str();
    svg->add_option("--width", o.width, "viewport width")->capture_default_str();
    svg->add_option("--height", o.height, "viewport height")->capture_default_str();
    add_out_option(svg, o);

    CLI::App* bench = app.add_subcommand("bench", "run the reference fits and report limits");
    bench->add_option("--tol", o.fit.tol, "Newton tolerance on |g(A)|")->capture_default_str();
    bench->add_option("--max-iter", o.fit.max_iter, "Newton iteration limit")
        ->capture_default_str();
    bench->add_option("--guess", o.fit.guess, "initial guess")
        ->check(CLI::IsMember({"linear", "cubic", "quintic"}))
        ->capture_default_str();
    bench->add_flag("--full-grid", o.full_grid,
                    "also run the 1025x1025 iteration histogram for every guess");
    bench->add_option("--threads", o.threads, "worker threads for --full-grid")
        ->capture_default_str();
    bench->add_option("--format", o.format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    add_out_option(bench, o);

    CLI::App* grid = app.add_subcommand("grid-stats", "histogram of Newton iterations on an angle grid");
    grid->add_option("--grid-n", o.grid_n, "lattice points per angle (>= 2)")
        ->capture_default_str();
    grid->add_option("--tol", o.fit.tol, "Newton tolerance on |g(A)|");
    grid->add_option("--max-iter", o.fit.max_iter, "Newton iteration limit")
        ->capture_default_str();
    grid->add_option("--guess", o.fit.guess, "initial guess")
        ->check(CLI::IsMember({"linear", "cubic", "quintic"}))
        ->capture_default_str();
    grid->add_option("--threads", o.threads, "worker threads")->capture_default_str();
    grid->add_option("--format", o.format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    add_out_option(grid, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (grid->parsed() && grid->count("--tol") == 0) {
        o.fit.tol = 1e-10;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (fit->parsed()) {
            code = cmd_fit(o, buffer);
        } else if (sample->parsed()) {
            code = cmd_sample(o, buffer);
        } else if (svg->parsed()) {
            code = cmd_svg(o, buffer);
        } else if (bench->parsed()) {
            code = cmd_bench(o, buffer);
        } else {
            code = cmd_grid_stats(o, buffer);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DegenerateInputError& e) {
        err << "degenerate input: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const ExcludedConfigurationError& e) {
        err << "excluded configuration: " << e.what() << '\n';
        return kExitExcluded;
    } catch (const ConvergenceError& e) {
        err << "no convergence: " << e.what() << " (last A = " << format_number(e.last_iterate())
            << ", " << e.iterations() << " iterations)\n";
        return kExitNoConvergence;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    if (code != kExitOk) {
        return code;
    }
    return write_output(o.out, buffer.str(), out, err);
}

} // namespace clothoidfit::cli
