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

#ifndef CLOTHOIDFIT_CLI_HPP
#define CLOTHOIDFIT_CLI_HPP

#include "clothoidfit/fitter.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace clothoidfit::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitDegenerate = 3,
    kExitExcluded = 4,
    kExitNoConvergence = 5,
};

/// printf("%.17g"); independent of the global locale.
std::string format_number(double v);

std::string fit_record_json(const FitResult& fit);
std::string fit_record_csv(const FitResult& fit);

void write_samples_csv(std::ostream& os, const std::vector<CurveSample>& rows);
void write_samples_json(std::ostream& os, const std::vector<CurveSample>& rows);

/// SVG 1.1 document: one polyline through the samples, scaled uniformly into
/// a width x height viewport, plus circles marking the start and the end.
std::string render_svg(const std::vector<CurveSample>& rows, double width, double height);

struct BenchCase {
    std::string name;
    int k = 0; ///< refinement index of the parametric cases, 0 otherwise
    HermiteData data;
    int max_iterations = 0;
    double max_endpoint_error = 0.0;
};

/// The six fixed benchmark fits followed by the near-line and near-circle
/// families for k = 1..10.
std::vector<BenchCase> bench_cases();

struct BenchRow {
    BenchCase bench;
    bool solved = false;
    int iterations = 0;
    double endpoint_error = 0.0;
    double seconds = 0.0;
    std::string error;

    bool within_limits() const noexcept
    {
        return solved && iterations <= bench.max_iterations &&
               endpoint_error <= bench.max_endpoint_error;
    }
};

std::vector<BenchRow> run_bench(const FitConfig& cfg);

struct GridStats {
    int grid_n = 0;
    double tol = 0.0;
    GuessVariant guess = GuessVariant::quintic;
    std::map<int, long> histogram; ///< iterations -> number of cells
    long failures = 0;
    int max_iterations = 0;
    double seconds = 0.0;

    long cells() const noexcept { return static_cast<long>(grid_n) * grid_n; }
    /// Fraction of cells solved in at most `iterations` evaluations.
    double fraction_at_most(int iterations) const noexcept;
};

/// Solves on the grid_n x grid_n lattice of (phi0, phi1) over
/// [-0.9999 pi, 0.9999 pi]^2, both ends included. Rows are split across
/// `threads` workers; the result does not depend on the thread count.
GridStats grid_stats(int grid_n, double tol, GuessVariant guess, int threads = 1);

/// Entry point of the `clothoidfit` executable. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace clothoidfit::cli

#endif // CLOTHOIDFIT_CLI_HPP
