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

#ifndef WTRAP_FADDEEVA_HPP
#define WTRAP_FADDEEVA_HPP

// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
//
// In the closed upper half plane w is the trapezoidal sum of
//
//     w(z) = (i z / pi) int exp(-t^2) / (z^2 - t^2) dt
//
// plus the residues at t = +-z:
//
//     w(z) = i h/(pi z) + (2 i h z/pi) sum_n exp(-n^2 h^2)/(z^2 - n^2 h^2)
//            + P exp(-z^2) / (1 - exp(-2 pi i z/h))                (lattice)
//
//     w(z) = (2 i h z/pi) sum_n exp(-(n-1/2)^2 h^2)/(z^2 - (n-1/2)^2 h^2)
//            + P exp(-z^2) / (1 + exp(-2 pi i z/h))                (staggered)
//
// with P = 2, 1, 0 for Im z below, on, or above pi/h. The lattice form is
// used when frac(|Re z|/h) lies in [1/4, 3/4], which keeps both the sum
// denominators and |1 -+ exp(-2 pi i z/h)| >= sqrt(2) away from zero on the
// real axis. The lower half plane follows from w(z) = 2 exp(-z^2) - w(-z).
//
// Regions (for the default binary64 parameters):
//   A          0 <= Im z <= pi/h, |Re z| <= re_cut    all terms
//   B          rest of Im z >= 0                      pole term dropped
//   C          Im z < 0, |Re(-z^2)| <= g               both reflection terms
//   D          Im z < 0, Re(-z^2) < -g                 -w(-z) only
//   E          Im z < 0, Re(-z^2) > g                  2 exp(-z^2) only
//   REAL_AXIS  Im z == 0                              real arithmetic
//   IMAG_AXIS  Re z == 0 (origin included)            real arithmetic, erfcx

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string_view>

#include "wtrap/detail/precise_exp.hpp"
#include "wtrap/tuning.hpp"

namespace wtrap {

enum class Region : std::uint8_t { A, B, C, D, E, REAL_AXIS, IMAG_AXIS };

inline constexpr std::array<Region, 7> all_regions{Region::A, Region::B, Region::C, Region::D,
                                                   Region::E, Region::REAL_AXIS, Region::IMAG_AXIS};

constexpr std::string_view to_string(Region r)
{
    switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
    case Region::D: return "D";
    case Region::E: return "E";
    case Region::REAL_AXIS: return "REAL_AXIS";
    case Region::IMAG_AXIS: return "IMAG_AXIS";
    }
    return "?";
}

struct WResult {
    std::complex<double> value;
    Region region = Region::A;
    bool overflowed = false;
};

namespace detail {

inline constexpr double inv_sqrt_pi = std::numbers::inv_sqrtpi;
inline constexpr double two_over_sqrt_pi = 2.0 * std::numbers::inv_sqrtpi;

// |Re z| / h split as integer + fraction, with the rounding error of the
// division carried in `lo` so phases 2 pi x/h stay accurate for large |x|.
struct NodeOffset {
    double frac; // in [0, 1)
    double lo;
};

inline NodeOffset node_offset(double ax, double h)
{
    const double t = ax / h;
    // ax - t h is exact: t h is within an ulp of ax
    const TwoWord th = two_prod(t, h);
    const double lo = ((ax - th.hi) - th.lo) / h;
    double frac = t - std::floor(t);
    return {frac, lo};
}

inline bool use_lattice_nodes(double frac)
{
    return frac >= 0.25 && frac <= 0.75;
}

// Horner evaluation of sum_{k<terms} c_k u^k with c_k = (1/2)_k.
// (1/2)_k = 1/2 * 3/2 * ... * (k - 1/2); every entry is exact in binary64.
inline constexpr std::array<double, 32> half_pochhammer = [] {
    std::array<double, 32> c{};
    c[0] = 1.0;
    for (std::size_t k = 1; k < c.size(); ++k) {
        c[k] = c[k - 1] * (static_cast<double>(k) - 0.5);
    }
    return c;
}();

inline int clamp_terms(int terms) { return terms < 1 ? 1 : (terms > 32 ? 32 : terms); }

// sum_k (1/2)_k u^k by Horner, in real arithmetic to avoid the library's
// checked complex multiply.
inline std::complex<double> half_pochhammer_series(std::complex<double> u, int terms)
{
    const int n = clamp_terms(terms);
    const double ur = u.real();
    const double ui = u.imag();
    double ar = half_pochhammer[static_cast<std::size_t>(n - 1)];
    double ai = 0.0;
    for (int k = n - 2; k >= 0; --k) {
        const double tr = ar * ur - ai * ui + half_pochhammer[static_cast<std::size_t>(k)];
        ai = ar * ui + ai * ur;
        ar = tr;
    }
    return {ar, ai};
}

inline double half_pochhammer_series(double u, int terms)
{
    const int n = clamp_terms(terms);
    double acc = half_pochhammer[static_cast<std::size_t>(n - 1)];
    for (int k = n - 2; k >= 0; --k) {
        acc = acc * u + half_pochhammer[static_cast<std::size_t>(k)];
    }
    return acc;
}

} // namespace detail

/// Region tag of a finite argument.
inline Region classify_region(std::complex<double> z, const EvalParams& p)
{
    const double x = z.real();
    const double y = z.imag();
    if (x == 0.0) {
        return Region::IMAG_AXIS;
    }
    if (y == 0.0) {
        return Region::REAL_AXIS;
    }
    if (y > 0.0) {
        return (y <= p.strip_height && std::abs(x) <= p.re_cut) ? Region::A : Region::B;
    }
    const double gauss = (y - x) * (y + x);
    if (gauss < -p.g_cut) {
        return Region::D;
    }
    if (gauss > p.g_cut) {
        return Region::E;
    }
    return Region::C;
}

/// Truncated asymptotic series (i/sqrt(pi)) sum_{n<terms} (1/2)_n / z^(2n+1),
/// valid for -pi/4 < arg z < 5pi/4 and large |z|.
inline std::complex<double> w_asymptotic(std::complex<double> z, int terms)
{
    // 1/z for finite nonzero z; callers only use this far from the origin
    const double x = z.real();
    const double y = z.imag();
    const double d = x * x + y * y;
    const double vr = x / d;
    const double vi = -y / d;
    const std::complex<double> s = detail::half_pochhammer_series({vr * vr - vi * vi, 2.0 * vr * vi}, terms);
    // (i / sqrt(pi)) v s
    const double pr = vr * s.real() - vi * s.imag();
    const double qi = vr * s.imag() + vi * s.real();
    return {-detail::inv_sqrt_pi * qi, detail::inv_sqrt_pi * pr};
}

namespace detail {

// Residue term of the trapezoidal formula at Im z >= 0, sign included:
// -P exp(-z^2)/(1 - q) on lattice nodes, +P exp(-z^2)/(1 + q) on staggered
// ones, q = exp(-2 pi i z/h). Zero where the term is neglected.
inline std::complex<double> pole_correction(std::complex<double> z, const EvalParams& p)
{
    const double x = z.real();
    const double y = z.imag();
    const double ax = std::abs(x);
    double pole_weight = 0.0;
    if (y < p.strip_height) {
        pole_weight = ax > p.re_cut ? 0.0 : 2.0;
    }
    else if (y == p.strip_height) {
        pole_weight = 1.0;
    }
    if (pole_weight == 0.0) {
        return {0.0, 0.0};
    }
    const NodeOffset off = node_offset(ax, p.h);
    // With r = 1/q = exp(2 pi i z/h), |r| <= 1 for y >= 0:
    //   1/(1 - q) = -r/(1 - r),  1/(1 + q) = r/(1 + r).
    // The phase of r only needs frac(|x|/h); its sign follows x.
    const double two_pi = 2.0 * std::numbers::pi;
    const double sign = x < 0.0 ? -1.0 : 1.0;
    const TwoWord phase{sign * two_pi * off.frac, sign * two_pi * off.lo};
    const double decay = std::exp(-two_pi * y / p.h);
    const std::complex<double> r = decay * cis2w(phase);

    // exp(-z^2) * r = exp(-z^2 + 2 pi i z/h)
    TwoWord nre{};
    TwoWord nim{};
    neg_square(z, nre, nim);
    const TwoWord lin = two_prod(-two_pi / p.h, y);
    const TwoWord ere = two_sum(nre.hi, lin.hi);
    const TwoWord eim = two_sum(nim.hi, phase.hi);
    const double mag = exp2w({ere.hi, ere.lo + nre.lo + lin.lo});
    const std::complex<double> num = mag * cis2w({eim.hi, eim.lo + nim.lo + phase.lo});
    if (use_lattice_nodes(off.frac)) {
        return -pole_weight * num / (1.0 - r);
    }
    return pole_weight * num / (1.0 + r);
}

} // namespace detail

/// Trapezoidal formula for Im z >= 0.
inline std::complex<double> w_upper(std::complex<double> z, const EvalParams& p)
{
    const double x = z.real();
    const double y = z.imag();
    const double h = p.h;
    const bool lattice = detail::use_lattice_nodes(detail::node_offset(std::abs(x), h).frac);

    const std::vector<double>& nodes = lattice ? p.node : p.stag_node;
    const std::vector<double>& weights = lattice ? p.scaled_weight : p.stag_scaled_weight;

    // (2h/pi) sum_n w_n / (z^2 - a_n^2), with z^2 - a^2 = (x - a)(x + a) - y^2 + 2ixy.
    // Smallest terms first: adding the Gaussian tail to a large partial sum
    // would cost up to half an ulp per term.
    const double two_xy = 2.0 * x * y;
    const double two_xy_sq = two_xy * two_xy;
    double sre = 0.0;
    double sim = 0.0;
    for (std::size_t n = nodes.size(); n-- > 0;) {
        const double a = nodes[n];
        const double dre = detail::diff_of_products(x - a, x + a, y, y);
        const double scale = weights[n] / detail::mul_add(dre, dre, two_xy_sq);
        sre = detail::mul_add(dre, scale, sre);
        sim = detail::mul_add(-two_xy, scale, sim);
    }
    // i z s
    std::complex<double> result{-detail::mul_add(x, sim, y * sre), detail::mul_add(x, sre, -y * sim)};
    if (lattice) {
        result += std::complex<double>(0.0, h / std::numbers::pi) / z;
    }
    return result + detail::pole_correction(z, p);
}

namespace detail {

inline constexpr long double pi_ext = std::numbers::pi_v<long double>;

// (2/sqrt(pi)) * Dawson series sum (-2)^k x^(2k+1) / (2k+1)!!
inline double im_w_maclaurin(double x, int terms)
{
    const double x2 = x * x;
    double c = 1.0;
    std::array<double, 64> coef{};
    const int n = terms < 64 ? terms : 64;
    for (int k = 0; k < n; ++k) {
        coef[static_cast<std::size_t>(k)] = c;
        c *= -2.0 / (2.0 * k + 3.0);
    }
    double acc = coef[static_cast<std::size_t>(n - 1)];
    for (int k = n - 2; k >= 0; --k) {
        acc = acc * x2 + coef[static_cast<std::size_t>(k)];
    }
    return two_over_sqrt_pi * x * acc;
}

// erfcx in extended precision; erfc and erf are formed from it before the
// final rounding.
inline long double erfcx_ext(double x, const EvalParams& p)
{
    if (std::isnan(x)) {
        return x;
    }
    if (x < 0.0) {
        return 2.0L * exp_pos_sq_ext(x) - erfcx_ext(-x, p);
    }
    if (p.use_asymptotic && x > p.asym_radius) {
        // w(ix) = (1/sqrt(pi)) sum (-1)^n (1/2)_n / x^(2n+1)
        const double inv = 1.0 / x;
        return inv_sqrt_pi * inv * half_pochhammer_series(-inv * inv, p.asym_terms);
    }
    if (std::isinf(x)) {
        return 0.0L;
    }
    // Re x = 0 selects the staggered nodes; with z = ix every denominator
    // z^2 - b^2 = -(x^2 + b^2) is real and negative.
    const long double xe = x;
    const long double he = p.h;
    long double s = 0.0L;
    for (std::size_t n = p.stag_node_ext.size(); n-- > 0;) {
        const long double b = p.stag_node_ext[n];
        s += p.stag_weight_ext[n] / (xe * xe + b * b);
    }
    long double result = 2.0L * he / pi_ext * xe * s;
    long double pole_weight = 0.0L;
    if (x < p.strip_height) {
        pole_weight = 2.0L;
    }
    else if (x == p.strip_height) {
        pole_weight = 1.0L;
    }
    if (pole_weight != 0.0L) {
        // P exp(x^2) / (1 + exp(2 pi x/h)) = P exp(x^2 - 2 pi x/h) / (1 + exp(-2 pi x/h))
        const long double decay = std::exp(-2.0L * pi_ext / he * xe);
        result += pole_weight * exp_pos_sq_ext(x) * decay / (1.0L + decay);
    }
    return result;
}

// Im w(x) in extended precision: the node sum and the residue term cancel
// by up to a factor of six in binary64.
inline long double im_w_ext(double x, const EvalParams& p)
{
    if (std::isnan(x)) {
        return x;
    }
    const double ax = std::abs(x);
    const long double sign = x < 0.0 ? -1.0L : 1.0L;
    if (ax == 0.0) {
        return x;
    }
    if (p.use_maclaurin && ax <= p.maclaurin_radius) {
        return im_w_maclaurin(x, p.maclaurin_terms);
    }
    if (p.use_asymptotic && ax > p.asym_radius) {
        const double inv = 1.0 / ax;
        return sign * inv_sqrt_pi * inv * half_pochhammer_series(inv * inv, p.asym_terms);
    }
    if (std::isinf(ax)) {
        return sign * 0.0L;
    }
    const NodeOffset off = node_offset(ax, p.h);
    const bool lattice = use_lattice_nodes(off.frac);
    const std::vector<long double>& nodes = lattice ? p.node_ext : p.stag_node_ext;
    const std::vector<long double>& weights = lattice ? p.weight_ext : p.stag_weight_ext;

    const long double xe = ax;
    const long double he = p.h;
    long double s = 0.0L;
    for (std::size_t n = nodes.size(); n-- > 0;) {
        const long double a = nodes[n];
        s += weights[n] / ((xe - a) * (xe + a));
    }
    long double result = 2.0L * he / pi_ext * xe * s;
    if (lattice) {
        result += he / (pi_ext * xe);
    }
    if (ax <= p.re_cut) {
        // 2 exp(-x^2) / (1 -+ exp(-i theta)) contributes -exp(-x^2) cot(theta/2)
        // (lattice) or +exp(-x^2) tan(theta/2) (staggered) to Im w, with
        // theta/2 = pi x / h reduced to the fractional offset.
        long double f = off.frac;
        if (!lattice && f > 0.5L) {
            f -= 1.0L;
        }
        const long double angle = pi_ext * (f + static_cast<long double>(off.lo));
        const long double g = exp_neg_sq_ext(ax);
        result += lattice ? -g / std::tan(angle) : g * std::tan(angle);
    }
    return sign * result;
}

} // namespace detail

/// erfcx(x) = exp(x^2) erfc(x) = w(ix) in real arithmetic.
inline double erfcx_real(double x, const EvalParams& p)
{
    return static_cast<double>(detail::erfcx_ext(x, p));
}

/// Im w(x) for real x, i.e. (2/sqrt(pi)) Dawson(x). Odd in x.
inline double im_w_real(double x, const EvalParams& p)
{
    return static_cast<double>(detail::im_w_ext(x, p));
}

/// w(z) over the whole plane, with the region used and an overflow flag.
inline WResult w(std::complex<double> z, const EvalParams& p)
{
    const double x = z.real();
    const double y = z.imag();
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    if (std::isnan(x) || std::isnan(y)) {
        return {{nan, nan}, Region::A, false};
    }
    if (std::isinf(x) || std::isinf(y)) {
        return {{nan, nan}, Region::B, false};
    }
    const Region region = classify_region(z, p);
    auto upper = [&p](std::complex<double> u) {
        if (p.use_asymptotic && std::norm(u) > p.asym_radius * p.asym_radius) {
            return w_asymptotic(u, p.asym_terms);
        }
        return w_upper(u, p);
    };

    WResult out{{0.0, 0.0}, region, false};
    switch (region) {
    case Region::IMAG_AXIS:
        out.value = {erfcx_real(y, p), 0.0};
        break;
    case Region::REAL_AXIS:
        out.value = {detail::exp_neg_sq(x), im_w_real(x, p)};
        break;
    case Region::A:
    case Region::B:
        out.value = upper(z);
        break;
    case Region::C:
        out.value = 2.0 * detail::exp_neg_sq(z) - upper(-z);
        break;
    case Region::D:
        out.value = -upper(-z);
        break;
    case Region::E:
        out.value = 2.0 * detail::exp_neg_sq(z);
        break;
    }
    // Only exp(-z^2) (or exp(y^2) on the imaginary axis) can leave the
    // binary64 range for finite z.
    out.overflowed = !std::isfinite(out.value.real()) || !std::isfinite(out.value.imag());
    return out;
}

/// Relative condition number z w'(z) / w(z) = 2iz/(sqrt(pi) w(z)) - 2z^2.
inline std::complex<double> cond_w(std::complex<double> z, const EvalParams& p)
{
    const std::complex<double> wz = w(z, p).value;
    return std::complex<double>(0.0, detail::two_over_sqrt_pi) * z / wz - 2.0 * z * z;
}

} // namespace wtrap

#endif // WTRAP_FADDEEVA_HPP
