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

#ifndef WTRAP_ERRLIKE_HPP
#define WTRAP_ERRLIKE_HPP

// erf, erfc, erfcx, erfi and the Dawson integral from w(z). The branch on
// the sign of Re z (Im z for erfi) keeps the exponential factor and w on
// the side where neither overflows against the other.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "wtrap/detail/precise_exp.hpp"
#include "wtrap/faddeeva.hpp"
#include "wtrap/tuning.hpp"

namespace wtrap {

enum class FunctionKind : std::uint8_t { ERF, ERFC, ERFCX, ERFI, DAWSON, W, IM_W };

inline constexpr std::array<FunctionKind, 7> all_kinds{FunctionKind::ERF,    FunctionKind::ERFC,
                                                       FunctionKind::ERFCX,  FunctionKind::ERFI,
                                                       FunctionKind::DAWSON, FunctionKind::W,
                                                       FunctionKind::IM_W};

/// Command-line spelling of a kind.
constexpr std::string_view to_string(FunctionKind k)
{
    switch (k) {
    case FunctionKind::ERF: return "erf";
    case FunctionKind::ERFC: return "erfc";
    case FunctionKind::ERFCX: return "erfcx";
    case FunctionKind::ERFI: return "erfi";
    case FunctionKind::DAWSON: return "dawson";
    case FunctionKind::W: return "w";
    case FunctionKind::IM_W: return "imw";
    }
    return "?";
}

inline std::optional<FunctionKind> parse_kind(std::string_view name)
{
    for (FunctionKind k : all_kinds) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

namespace detail {

inline std::complex<double> rot_i(std::complex<double> z) { return {-z.imag(), z.real()}; }
inline std::complex<double> rot_minus_i(std::complex<double> z) { return {z.imag(), -z.real()}; }

inline constexpr double half_sqrt_pi = 0.88622692545275801365; // sqrt(pi)/2

// Odd series near the origin, sum c_k x^(2k+1) with c_{k+1} = c_k * ratio(k).
template <class Ratio>
double odd_series(double x, int terms, double lead, Ratio ratio)
{
    std::array<double, 64> coef{};
    const int n = terms < 64 ? terms : 64;
    double c = lead;
    for (int k = 0; k < n; ++k) {
        coef[static_cast<std::size_t>(k)] = c;
        c *= ratio(k);
    }
    const double x2 = x * x;
    double acc = coef[static_cast<std::size_t>(n - 1)];
    for (int k = n - 2; k >= 0; --k) {
        acc = acc * x2 + coef[static_cast<std::size_t>(k)];
    }
    return x * acc;
}

// erf: (2/sqrt(pi)) sum (-1)^k x^(2k+1) / (k! (2k+1))
inline double erf_maclaurin(double x, int terms)
{
    return odd_series(x, terms, two_over_sqrt_pi,
                      [](int k) { return -(2.0 * k + 1.0) / ((k + 1.0) * (2.0 * k + 3.0)); });
}

// erfi: (2/sqrt(pi)) sum x^(2k+1) / (k! (2k+1))
inline double erfi_maclaurin(double x, int terms)
{
    return odd_series(x, terms, two_over_sqrt_pi,
                      [](int k) { return (2.0 * k + 1.0) / ((k + 1.0) * (2.0 * k + 3.0)); });
}

// Dawson: sum (-2)^k x^(2k+1) / (2k+1)!!
inline double dawson_maclaurin(double x, int terms)
{
    return odd_series(x, terms, 1.0, [](int k) { return -2.0 / (2.0 * k + 3.0); });
}

} // namespace detail

/// Value of `kind` at complex z.
inline std::complex<double> evaluate(FunctionKind kind, std::complex<double> z, const EvalParams& p)
{
    using detail::exp_neg_sq;
    using detail::exp_pos_sq;
    using detail::rot_i;
    using detail::rot_minus_i;
    using detail::half_sqrt_pi;
    const std::complex<double> i{0.0, 1.0};

    switch (kind) {
    case FunctionKind::W:
        return w(z, p).value;
    case FunctionKind::IM_W:
        return {w(z, p).value.imag(), 0.0};
    case FunctionKind::ERFCX:
        return w(rot_i(z), p).value;
    case FunctionKind::ERFC:
        if (z.real() >= 0.0) {
            return exp_neg_sq(z) * w(rot_i(z), p).value;
        }
        return 2.0 - exp_neg_sq(z) * w(rot_minus_i(z), p).value;
    case FunctionKind::ERF:
        if (z.real() >= 0.0) {
            return 1.0 - exp_neg_sq(z) * w(rot_i(z), p).value;
        }
        return exp_neg_sq(z) * w(rot_minus_i(z), p).value - 1.0;
    case FunctionKind::ERFI:
        if (z.imag() <= 0.0) {
            return -i + i * exp_pos_sq(z) * w(-z, p).value;
        }
        return -i * exp_pos_sq(z) * w(z, p).value + i;
    case FunctionKind::DAWSON:
        if (z.real() >= 0.0) {
            return i * half_sqrt_pi * (exp_neg_sq(z) - w(z, p).value);
        }
        return i * half_sqrt_pi * (w(-z, p).value - exp_neg_sq(z));
    }
    throw std::invalid_argument("evaluate: unknown function kind");
}

/// Value of `kind` at real x using real arithmetic only. Not defined for W,
/// which is complex on the real axis. Intermediate values are carried in
/// extended precision and rounded once.
inline double evaluate_real(FunctionKind kind, double x, const EvalParams& p)
{
    using detail::erfcx_ext;
    using detail::exp_neg_sq_ext;
    using detail::im_w_ext;
    const bool series = p.use_maclaurin && std::abs(x) <= p.maclaurin_radius;

    switch (kind) {
    case FunctionKind::ERFCX:
        return erfcx_real(x, p);
    case FunctionKind::ERFC:
        if (x >= 0.0) {
            return static_cast<double>(exp_neg_sq_ext(x) * erfcx_ext(x, p));
        }
        return static_cast<double>(2.0L - exp_neg_sq_ext(x) * erfcx_ext(-x, p));
    case FunctionKind::ERF: {
        if (series) {
            return detail::erf_maclaurin(x, p.maclaurin_terms);
        }
        const double ax = std::abs(x);
        const double v = static_cast<double>(1.0L - exp_neg_sq_ext(ax) * erfcx_ext(ax, p));
        return x < 0.0 ? -v : v;
    }
    case FunctionKind::ERFI: {
        if (series) {
            return detail::erfi_maclaurin(x, p.maclaurin_terms);
        }
        const long double g = detail::exp_pos_sq_ext(x);
        const long double im = im_w_ext(x, p);
        if (std::isinf(g)) {
            return std::copysign(std::numeric_limits<double>::infinity(), static_cast<double>(im));
        }
        return static_cast<double>(g * im);
    }
    case FunctionKind::DAWSON:
        if (series) {
            return detail::dawson_maclaurin(x, p.maclaurin_terms);
        }
        return static_cast<double>(std::sqrt(detail::pi_ext) / 2.0L * im_w_ext(x, p));
    case FunctionKind::IM_W:
        return im_w_real(x, p);
    case FunctionKind::W:
        break;
    }
    throw std::invalid_argument("evaluate_real: w is complex-valued on the real axis");
}

// Convenience wrappers with binary64 parameters.

inline std::complex<double> faddeeva(std::complex<double> z) { return w(z, double_params()).value; }
inline std::complex<double> erf(std::complex<double> z) { return evaluate(FunctionKind::ERF, z, double_params()); }
inline std::complex<double> erfc(std::complex<double> z) { return evaluate(FunctionKind::ERFC, z, double_params()); }
inline std::complex<double> erfcx(std::complex<double> z) { return evaluate(FunctionKind::ERFCX, z, double_params()); }
inline std::complex<double> erfi(std::complex<double> z) { return evaluate(FunctionKind::ERFI, z, double_params()); }
inline std::complex<double> dawson(std::complex<double> z) { return evaluate(FunctionKind::DAWSON, z, double_params()); }

inline double erf(double x) { return evaluate_real(FunctionKind::ERF, x, double_params()); }
inline double erfc(double x) { return evaluate_real(FunctionKind::ERFC, x, double_params()); }
inline double erfcx(double x) { return evaluate_real(FunctionKind::ERFCX, x, double_params()); }
inline double erfi(double x) { return evaluate_real(FunctionKind::ERFI, x, double_params()); }
inline double dawson(double x) { return evaluate_real(FunctionKind::DAWSON, x, double_params()); }
inline double im_w(double x) { return im_w_real(x, double_params()); }

} // namespace wtrap

#endif // WTRAP_ERRLIKE_HPP
