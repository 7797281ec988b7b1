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

#ifndef WTRAP_SELFTEST_HPP
#define WTRAP_SELFTEST_HPP

// Identity checks that need no reference data. Each check reports the worst
// normalised defect it saw and the tolerance it was held to.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wtrap/errlike.hpp"
#include "wtrap/faddeeva.hpp"
#include "wtrap/tuning.hpp"

namespace wtrap {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;
    double tolerance = 0.0;
};

namespace detail {

inline bool finite(std::complex<double> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Tolerances below are in deps at binary64 targets; a coarser eps widens them.
inline double eps_scale(const EvalParams& p) { return std::max(1.0, p.eps / deps); }

inline CheckResult make_check(std::string name, double worst, double tol)
{
    return {std::move(name), worst <= tol, worst, tol};
}

// Size of the discretisation error actually incurred by `p`. Equals eps for
// tuned parameters; larger when the step has been overridden.
inline double quadrature_error_scale(const EvalParams& p)
{
    const double s = std::numbers::pi / p.h;
    return std::max(p.eps, 2.0 * std::exp(-s * s));
}

} // namespace detail

/// w(z) + w(-z) = 2 exp(-z^2), error in units of deps relative to the
/// larger side.
inline CheckResult check_reflection(const EvalParams& p, int samples = 10000, unsigned seed = 1u)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-12.0, 12.0);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const std::complex<double> z{coord(rng), coord(rng)};
        const std::complex<double> a = w(z, p).value;
        const std::complex<double> b = w(-z, p).value;
        const std::complex<double> g = 2.0 * detail::exp_neg_sq(z);
        if (!detail::finite(a) || !detail::finite(b) || !detail::finite(g)) {
            continue;
        }
        const double scale = std::max(std::abs(a), std::abs(g));
        worst = std::max(worst, std::abs(a + b - g) / (scale * deps));
    }
    return detail::make_check("reflection", worst, 8.0 * detail::eps_scale(p));
}

/// erf(z) + erfc(z) = 1, in deps relative to max(1, |erf z|).
inline CheckResult check_erf_sum(const EvalParams& p, int samples = 10000, unsigned seed = 2u)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-8.0, 8.0);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const std::complex<double> z{coord(rng), coord(rng)};
        const std::complex<double> e = evaluate(FunctionKind::ERF, z, p);
        const std::complex<double> c = evaluate(FunctionKind::ERFC, z, p);
        if (!detail::finite(e) || !detail::finite(c)) {
            continue;
        }
        const double scale = std::max(1.0, std::abs(e));
        worst = std::max(worst, std::abs(e + c - 1.0) / (scale * deps));
    }
    return detail::make_check("erf_plus_erfc", worst, 8.0 * detail::eps_scale(p));
}

/// w'(z) = 2i/sqrt(pi) - 2 z w(z) against a central difference with step
/// 1e-6, for |z| <= 5 in the upper half plane. The defect is taken relative
/// to |2i/sqrt(pi)| + |2 z w(z)|: w' itself is the difference of those two
/// and can be 50 times smaller, which would leave the check measuring the
/// O(ulp / delta) rounding noise of the difference quotient.
inline CheckResult check_derivative(const EvalParams& p, int samples = 2000, unsigned seed = 3u)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    constexpr double delta = 1e-6;
    const std::complex<double> two_i_over_sqrt_pi{0.0, detail::two_over_sqrt_pi};
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double r = 5.0 * std::sqrt(radius(rng));
        const std::complex<double> z = std::polar(r, angle(rng));
        const std::complex<double> zp = z + delta;
        const std::complex<double> zm = z - delta;
        // divide by the step actually taken after rounding
        const std::complex<double> fd = (w(zp, p).value - w(zm, p).value) / (zp - zm);
        const std::complex<double> exact = two_i_over_sqrt_pi - 2.0 * z * w(z, p).value;
        const double scale = detail::two_over_sqrt_pi + std::abs(2.0 * z * w(z, p).value);
        worst = std::max(worst, std::abs(fd - exact) / scale);
    }
    const double tol = std::max(1e-9, 10.0 * detail::quadrature_error_scale(p));
    return detail::make_check("derivative_identity", worst, tol);
}

/// Re w(x) = exp(-x^2) on [-26, 26], in deps relative.
inline CheckResult check_real_axis(const EvalParams& p, int samples = 4001)
{
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double x = -26.0 + 52.0 * static_cast<double>(k) / static_cast<double>(samples - 1);
        // x*x is exact enough in extended precision for the exponent
        const long double ref = std::exp(-static_cast<long double>(x) * x);
        if (ref < std::numeric_limits<double>::min()) {
            continue;
        }
        const long double got = w({x, 0.0}, p).value.real();
        worst = std::max(worst, static_cast<double>(std::abs(got - ref) / ref / deps));
    }
    return detail::make_check("real_part_on_real_axis", worst, 2.0);
}

/// w(iy) is real; the worst |Im| / |Re| is reported.
inline CheckResult check_imag_axis(const EvalParams& p, int samples = 4001)
{
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double y = -26.0 + 52.0 * static_cast<double>(k) / static_cast<double>(samples - 1);
        const std::complex<double> v = w({0.0, y}, p).value;
        if (!std::isfinite(v.real())) {
            continue;
        }
        worst = std::max(worst, std::abs(v.imag()) / std::abs(v.real()));
    }
    return detail::make_check("imaginary_axis_real", worst, 0.0);
}

/// Distance from real x to the nearest node of the chosen node set, in units
/// of h (tolerance 0.245), and the smallest pole-term denominator
/// |1 -+ exp(-2 pi i x/h)| (tolerance sqrt 2).
inline std::vector<CheckResult> check_denominators(const EvalParams& p, int samples = 100000)
{
    double min_gap = std::numeric_limits<double>::infinity();
    double min_den = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const double x = -26.0 + 52.0 * static_cast<double>(k) / static_cast<double>(samples - 1);
        const double ax = std::abs(x);
        const detail::NodeOffset off = detail::node_offset(ax, p.h);
        const bool lattice = detail::use_lattice_nodes(off.frac);
        // nearest node: lattice nodes sit at integer multiples of h (0 included
        // through the h K(0) term), staggered ones at half-integers
        const double t = ax / p.h;
        const double gap = lattice ? std::abs(t - std::round(t)) : std::abs(t - std::floor(t) - 0.5);
        min_gap = std::min(min_gap, gap);
        const std::complex<double> q = std::polar(1.0, -2.0 * std::numbers::pi * off.frac);
        min_den = std::min(min_den, std::abs(lattice ? 1.0 - q : 1.0 + q));
    }
    // report as shortfall below the bound, so that passing means worst <= 0
    return {detail::make_check("node_distance", 0.245 - min_gap, 0.0),
            detail::make_check("pole_denominator", std::numbers::sqrt2 - 1e-12 - min_den, 0.0)};
}

/// w(-conj z) = conj w(z), in deps relative.
inline CheckResult check_conjugate_symmetry(const EvalParams& p, int samples = 10000, unsigned seed = 4u)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-12.0, 12.0);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const std::complex<double> z{coord(rng), coord(rng)};
        const std::complex<double> a = w(z, p).value;
        const std::complex<double> b = w(-std::conj(z), p).value;
        if (!detail::finite(a) || !detail::finite(b) || a == 0.0) {
            continue;
        }
        worst = std::max(worst, std::abs(b - std::conj(a)) / (std::abs(a) * deps));
    }
    return detail::make_check("conjugate_symmetry", worst, 8.0 * detail::eps_scale(p));
}

inline std::vector<CheckResult> run_selftest(const EvalParams& p)
{
    std::vector<CheckResult> out;
    out.push_back(check_reflection(p));
    out.push_back(check_erf_sum(p));
    out.push_back(check_derivative(p));
    out.push_back(check_real_axis(p));
    out.push_back(check_imag_axis(p));
    for (auto& c : check_denominators(p)) {
        out.push_back(std::move(c));
    }
    out.push_back(check_conjugate_symmetry(p));
    return out;
}

} // namespace wtrap

#endif // WTRAP_SELFTEST_HPP
