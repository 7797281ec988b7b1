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

#ifndef WTRAP_TRAP_ENGINE_HPP
#define WTRAP_TRAP_ENGINE_HPP

// Trapezoidal rule for integrals
//
//     f = int_{-inf}^{inf} K(t) exp(-t^2) dt,   K even and meromorphic in
//                                               the strip |Im t| < pi/h.
//
// With nodes on the lattice n h the rule reads
//
//     f = h K(0) + 2h sum_{n>=1} K(nh) exp(-n^2 h^2) + correction + O(E),
//
// and with staggered nodes (n - 1/2) h the h K(0) term disappears. The
// correction collects the residues of K exp(-t^2) / (1 -+ exp(-2 pi i t/h))
// at the poles of K inside the strip, minus those of K exp(-t^2) in the
// lower half strip. It is kernel specific, so callers compute it. Poles on
// Im t = 0 or |Im t| = pi/h contribute half.
//
// The error term enters the unstaggered and staggered formulas with opposite
// sign conventions in the derivation; it is never applied, only estimated.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <random>
#include <stdexcept>

#include "wtrap/detail/precise_exp.hpp"

namespace wtrap {

/// Even factor K(t) of the integrand, evaluated on the real line.
template <class K>
concept RealKernel = requires(const K& k, double t) {
    { k(t) } -> std::convertible_to<std::complex<double>>;
};

/// Kernel that can also be continued to complex t (needed for the error
/// estimate, which samples K at i pi / h).
template <class K>
concept ComplexKernel = RealKernel<K> && requires(const K& k, std::complex<double> t) {
    { k(t) } -> std::convertible_to<std::complex<double>>;
};

struct NodeScheme {
    double h = 0.5;
    int n_terms = 12;
    bool staggered = false;

    NodeScheme() = default;
    NodeScheme(double spacing, int terms, bool stagger)
        : h(spacing), n_terms(terms), staggered(stagger)
    {
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw std::domain_error("NodeScheme: h must be positive and finite");
        }
        if (n_terms < 1) {
            throw std::domain_error("NodeScheme: n_terms must be at least 1");
        }
    }

    /// Position of the n-th positive node, n = 1..n_terms.
    double node(int n) const
    {
        return staggered ? (static_cast<double>(n) - 0.5) * h : static_cast<double>(n) * h;
    }
};

/// Pre-computed total of the residue contributions.
struct PoleCorrection {
    std::complex<double> value{0.0, 0.0};
};

/// Trapezoidal estimate of int K(t) exp(-t^2) dt. Terms are accumulated in
/// ascending node order with Neumaier compensation, since the partial sum is
/// largest first and each tail term would otherwise round it again. A
/// non-finite kernel value propagates. The Gaussian weights carry the
/// rounding of t^2 (see precise_exp.hpp).
template <RealKernel K>
std::complex<double> trap_quadrature(const K& kernel, const NodeScheme& scheme,
                                     const PoleCorrection& correction = {})
{
    double sre = 0.0;
    double sim = 0.0;
    double cre = 0.0;
    double cim = 0.0;
    auto add = [](double& s, double& c, double v) {
        const double t = s + v;
        c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
        s = t;
    };
    for (int n = 1; n <= scheme.n_terms; ++n) {
        const double t = scheme.node(n);
        const std::complex<double> term = std::complex<double>(kernel(t)) * detail::exp_neg_sq(t);
        add(sre, cre, term.real());
        add(sim, cim, term.imag());
    }
    const std::complex<double> sum{sre + cre, sim + cim};
    std::complex<double> result = 2.0 * scheme.h * sum;
    if (!scheme.staggered) {
        result += scheme.h * std::complex<double>(kernel(0.0));
    }
    return result + correction.value;
}

/// Leading-order discretisation error 2 sqrt(pi) exp(-pi^2/h^2) K(i pi/h).
template <ComplexKernel K>
std::complex<double> error_estimate(const K& kernel, double h)
{
    if (!(h > 0.0)) {
        throw std::domain_error("error_estimate: h must be positive");
    }
    const double pi_over_h = std::numbers::pi / h;
    const double decay = std::exp(-pi_over_h * pi_over_h);
    if (decay == 0.0) {
        return {0.0, 0.0};
    }
    const std::complex<double> k = kernel(std::complex<double>(0.0, pi_over_h));
    return 2.0 * std::sqrt(std::numbers::pi) * decay * k;
}

/// Plain composite trapezoid of K(t) exp(-t^2) over [-half_width, half_width].
/// Only meant as a slow reference for pole-free kernels.
template <RealKernel K>
std::complex<double> brute_force_integral(const K& kernel, double half_width, long steps)
{
    if (!(half_width > 0.0)) {
        throw std::domain_error("brute_force_integral: half_width must be positive");
    }
    if (steps < 10000) {
        throw std::domain_error("brute_force_integral: at least 1e4 steps required");
    }
    const double dt = 2.0 * half_width / static_cast<double>(steps);
    auto f = [&](double t) { return std::complex<double>(kernel(t)) * std::exp(-t * t); };
    std::complex<double> sum = 0.5 * (f(-half_width) + f(half_width));
    for (long i = 1; i < steps; ++i) {
        sum += f(-half_width + static_cast<double>(i) * dt);
    }
    return sum * dt;
}

/// Samples K(t) and K(-t) at `samples` random points of (0, max_t) and
/// reports whether they agree to relative `tol`. Odd parts of a kernel do not
/// integrate to zero under the one-sided sums above, so callers check first.
template <RealKernel K>
bool spot_check_even(const K& kernel, double max_t = 8.0, int samples = 32, double tol = 1e-13,
                     unsigned seed = 12345u)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, max_t);
    for (int i = 0; i < samples; ++i) {
        const double t = dist(rng);
        const std::complex<double> a = kernel(t);
        const std::complex<double> b = kernel(-t);
        const double scale = std::max(std::abs(a), std::abs(b));
        if (std::abs(a - b) > tol * scale) {
            return false;
        }
    }
    return true;
}

} // namespace wtrap

#endif // WTRAP_TRAP_ENGINE_HPP
