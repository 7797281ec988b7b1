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

#ifndef WTRAP_TUNING_HPP
#define WTRAP_TUNING_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtrap/detail/precise_exp.hpp"

namespace wtrap {

/// binary64 machine epsilon; the unit all relative errors are reported in.
inline constexpr double deps = std::numeric_limits<double>::epsilon();

namespace detail {

inline void require_eps(double eps, const char* who)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::domain_error(std::string(who) + ": eps must lie in (0, 1)");
    }
}

// Upper root of v = log(scale * v^power) for power 1 or 1/2, i.e. the value
// beyond which v >= log(scale * v^power) holds. Fixed-point iteration from
// v = start to |dv| < 1e-9, then a Newton polish and an upward ulp walk so
// the returned v satisfies the inequality in binary64.
inline double log_threshold(double scale, double power, double start, const char* who)
{
    auto rhs = [scale, power](double v) { return std::log(scale) + power * std::log(v); };
    double v = start;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        const double next = rhs(v);
        if (!(next > 0.0)) {
            break;
        }
        const double step = next - v;
        v = next;
        if (std::abs(step) < 1e-9) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw std::runtime_error(std::string(who) + ": fixed-point iteration did not converge");
    }
    auto residual = [&rhs](double u) { return u - rhs(u); };
    v -= residual(v) / (1.0 - power / v);
    for (int k = 0; k < 64 && residual(v) < 0.0; ++k) {
        v = std::nextafter(v, std::numeric_limits<double>::infinity());
    }
    return v;
}

} // namespace detail

/// Node spacing for target relative accuracy `eps`:
/// h0 = pi / sqrt(log(2/eps)), corrected to h0 * (1 - 0.06 h0).
inline double step_size(double eps)
{
    detail::require_eps(eps, "step_size");
    const double h0 = std::numbers::pi / std::sqrt(std::log(2.0 / eps));
    return h0 * (1.0 - 0.06 * h0);
}

/// Number of retained sum terms, ceil(sqrt(log(2h / (sqrt(pi) eps)) / h^2)).
/// The same count serves the staggered and unstaggered node sets.
inline int truncation_terms(double eps, double h)
{
    detail::require_eps(eps, "truncation_terms");
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::domain_error("truncation_terms: h must be positive and finite");
    }
    const double arg = 2.0 * h / (std::sqrt(std::numbers::pi) * eps);
    if (!(arg > 1.0)) {
        throw std::domain_error("truncation_terms: log argument must exceed 1");
    }
    return static_cast<int>(std::ceil(std::sqrt(std::log(arg) / (h * h))));
}

/// |Re z| beyond which the pole term of the upper-half-plane formula is
/// below eps relative to w: r^2 >= log(sqrt(pi) r / (sqrt(2) eps)).
/// About 6.17 for binary64.
inline double pole_neglect_cutoff(double eps)
{
    detail::require_eps(eps, "pole_neglect_cutoff");
    // in terms of v = r^2: v >= log(c sqrt(v))
    const double v = detail::log_threshold(std::sqrt(std::numbers::pi) / (std::numbers::sqrt2 * eps),
                                           0.5, 25.0, "pole_neglect_cutoff");
    return std::sqrt(v);
}

/// Level-curve constant g with g >= log(2 sqrt(pi) g / eps), about 41.024
/// for binary64. Below Re(-z^2) = -g the Gaussian of the reflection formula
/// is negligible against w(-z), above +g it dominates.
inline double gaussian_cutoff(double eps)
{
    detail::require_eps(eps, "gaussian_cutoff");
    return detail::log_threshold(2.0 * std::sqrt(std::numbers::pi) / eps, 1.0, 25.0, "gaussian_cutoff");
}

/// Number of odd-series terms x^(2k+1) needed near the origin so that the
/// first dropped term of the Dawson series stays below eps relative at
/// |x| = radius. The same count is used for the erf and erfi series, whose
/// coefficients decay faster.
inline int maclaurin_terms(double eps, double radius)
{
    detail::require_eps(eps, "maclaurin_terms");
    const double x2 = radius * radius;
    // Ratio of term k to term 0 of sum (-2)^k x^(2k+1) / (2k+1)!!.
    double ratio = 1.0;
    int k = 0;
    while (ratio >= 0.5 * eps && k < 64) {
        ++k;
        ratio *= 2.0 * x2 / (2.0 * k + 1.0);
    }
    return k;
}

/// All tuning constants of the evaluator for one target accuracy.
/// Node tables are precomputed so evaluation is allocation-free.
struct EvalParams {
    double eps = 0.0;
    double h = 0.0;
    int n_terms = 0;
    double strip_height = 0.0; ///< pi / h
    double re_cut = 0.0;
    double g_cut = 0.0;
    double asym_radius = 30.0;
    int asym_terms = 6;
    bool use_asymptotic = false;
    bool use_maclaurin = false;
    double maclaurin_radius = 0.05;
    int maclaurin_terms = 0;

    // n h and exp(-(n h)^2), n = 1..N
    std::vector<double> node;
    std::vector<double> weight;
    // (n - 1/2) h and exp(-((n - 1/2) h)^2), n = 1..N
    std::vector<double> stag_node;
    std::vector<double> stag_weight;
    // weights times 2h/pi, rounded once
    std::vector<double> scaled_weight;
    std::vector<double> stag_scaled_weight;
    // The same tables in extended precision for the real-axis paths, whose
    // sums cancel against the residue term.
    std::vector<long double> node_ext;
    std::vector<long double> weight_ext;
    std::vector<long double> stag_node_ext;
    std::vector<long double> stag_weight_ext;
};

/// Builds parameters for an explicit node spacing. `build_params` calls this
/// with step_size(eps); the explicit form exists for debugging overrides.
inline EvalParams build_params_with_step(double eps, double h, bool use_asymptotic = false,
                                         bool use_maclaurin = false)
{
    detail::require_eps(eps, "build_params");
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::domain_error("build_params: h must be positive and finite");
    }
    EvalParams p;
    p.eps = eps;
    p.h = h;
    p.n_terms = truncation_terms(eps, h);
    p.strip_height = std::numbers::pi / h;
    p.re_cut = pole_neglect_cutoff(eps);
    p.g_cut = gaussian_cutoff(eps);
    p.use_asymptotic = use_asymptotic;
    p.use_maclaurin = use_maclaurin;
    p.maclaurin_terms = maclaurin_terms(eps, p.maclaurin_radius);

    const auto n = static_cast<std::size_t>(p.n_terms);
    p.node.resize(n);
    p.weight.resize(n);
    p.stag_node.resize(n);
    p.stag_weight.resize(n);
    p.scaled_weight.resize(n);
    p.stag_scaled_weight.resize(n);
    p.node_ext.resize(n);
    p.weight_ext.resize(n);
    p.stag_node_ext.resize(n);
    p.stag_weight_ext.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double a = static_cast<double>(k + 1) * h;
        const double b = (static_cast<double>(k) + 0.5) * h;
        p.node[k] = a;
        p.weight[k] = detail::exp_neg_sq(a);
        p.stag_node[k] = b;
        p.stag_weight[k] = detail::exp_neg_sq(b);
        const long double ae = static_cast<long double>(k + 1) * h;
        const long double be = (static_cast<long double>(k) + 0.5L) * h;
        p.node_ext[k] = ae;
        p.weight_ext[k] = std::exp(-ae * ae);
        p.stag_node_ext[k] = be;
        p.stag_weight_ext[k] = std::exp(-be * be);
        const long double c = 2.0L * h / std::numbers::pi_v<long double>;
        p.scaled_weight[k] = static_cast<double>(c * std::exp(-static_cast<long double>(a) * a));
        p.stag_scaled_weight[k] = static_cast<double>(c * std::exp(-static_cast<long double>(b) * b));
    }
    return p;
}

inline EvalParams build_params(double eps, bool use_asymptotic = false, bool use_maclaurin = false)
{
    return build_params_with_step(eps, step_size(eps), use_asymptotic, use_maclaurin);
}

/// Parameters for binary64 evaluation, built once.
inline const EvalParams& double_params()
{
    static const EvalParams params = build_params(deps);
    return params;
}

} // namespace wtrap

#endif // WTRAP_TUNING_HPP
