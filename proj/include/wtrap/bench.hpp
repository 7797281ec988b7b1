// Copyright 2026 The wtrap Authors
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

#ifndef WTRAP_BENCH_HPP
#define WTRAP_BENCH_HPP

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wtrap/errlike.hpp"
#include "wtrap/faddeeva.hpp"
#include "wtrap/reference.hpp"

namespace wtrap {

struct BenchBucket {
    Region region = Region::A;
    double ns_per_call = 0.0;
    std::size_t n = 0; ///< grid points in the bucket
};

struct BenchReport {
    std::vector<BenchBucket> buckets; ///< non-empty buckets in Region order
    double total_seconds = 0.0;
    double ns_per_call = 0.0;
    std::size_t calls = 0;
    double checksum = 0.0; ///< sum of finite Re + Im over one pass
};

/// Times `kind` over the grid. Points are grouped by region and each group is
/// timed as one loop of `repetitions` passes under a steady clock, so timer
/// overhead stays out of the per-call figures. Single threaded.
inline BenchReport run_bench(FunctionKind kind, const GridSpec& grid, int repetitions, const EvalParams& p)
{
    if (repetitions < 1) {
        throw std::invalid_argument("repetitions must be at least 1");
    }
    std::array<std::vector<std::complex<double>>, all_regions.size()> groups;
    for (const std::complex<double> z : grid.points()) {
        groups[static_cast<std::size_t>(classify_region(z, p))].push_back(z);
    }

    BenchReport report;
    double sink = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& pts = groups[g];
        if (pts.empty()) {
            continue;
        }
        double pass_sum = 0.0;
        const auto start = std::chrono::steady_clock::now();
        for (int rep = 0; rep < repetitions; ++rep) {
            pass_sum = 0.0;
            for (const std::complex<double> z : pts) {
                const std::complex<double> v = evaluate(kind, z, p);
                const double s = v.real() + v.imag();
                if (std::isfinite(s)) {
                    pass_sum += s;
                }
            }
            sink += pass_sum;
        }
        const auto stop = std::chrono::steady_clock::now();
        const double seconds = std::chrono::duration<double>(stop - start).count();
        const std::size_t calls = pts.size() * static_cast<std::size_t>(repetitions);

        report.buckets.push_back({static_cast<Region>(g), seconds * 1e9 / static_cast<double>(calls), pts.size()});
        report.total_seconds += seconds;
        report.calls += calls;
        report.checksum += pass_sum;
    }
    report.ns_per_call = report.calls == 0 ? 0.0 : report.total_seconds * 1e9 / static_cast<double>(report.calls);
    // keep the repeated passes observable
    volatile double keep = sink;
    (void)keep;
    return report;
}

} // namespace wtrap

#endif // WTRAP_BENCH_HPP
