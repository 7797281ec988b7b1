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

#ifndef WTRAP_DETAIL_PRECISE_EXP_HPP
#define WTRAP_DETAIL_PRECISE_EXP_HPP

// Gaussians of binary64 arguments. x*x loses up to x^2 * deps/2 in the
// exponent, which near |x| = 26 is several hundred ulps of exp(-x^2); the
// helpers here carry the rounding error of the square as a second word.

#include <cmath>
#include <complex>

namespace wtrap::detail {

struct TwoWord {
    double hi;
    double lo;
};

// std::fma is a slow library routine unless the target has the instruction.
#if defined(__FMA__) || defined(__FP_FAST_FMA)
#define WTRAP_HAS_FMA 1
#else
#define WTRAP_HAS_FMA 0
#endif

/// a * b + c, fused when the hardware can do it cheaply.
inline double mul_add(double a, double b, double c)
{
#if WTRAP_HAS_FMA
    return std::fma(a, b, c);
#else
    return a * b + c;
#endif
}

/// a * b = hi + lo exactly (barring over- and underflow).
inline TwoWord two_prod(double a, double b)
{
    const double p = a * b;
#if WTRAP_HAS_FMA
    return {p, std::fma(a, b, -p)};
#else
    // Dekker's product with Veltkamp splitting
    constexpr double split = 134217729.0; // 2^27 + 1
    const double ca = split * a;
    const double ahi = ca - (ca - a);
    const double alo = a - ahi;
    const double cb = split * b;
    const double bhi = cb - (cb - b);
    const double blo = b - bhi;
    return {p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo};
#endif
}

/// a * b - c * d with a couple of roundings at most, even under cancellation.
inline double diff_of_products(double a, double b, double c, double d)
{
#if WTRAP_HAS_FMA
    const double cd = c * d;
    return std::fma(a, b, -cd) + std::fma(-c, d, cd);
#else
    const TwoWord p = two_prod(a, b);
    const TwoWord q = two_prod(c, d);
    return (p.hi - q.hi) + (p.lo - q.lo);
#endif
}

inline TwoWord two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

/// exp(hi + lo) for |lo| <= ulp(hi).
inline double exp2w(TwoWord e)
{
    return std::exp(e.hi) * (1.0 + e.lo);
}

/// (cos, sin) of hi + lo for |lo| <= ulp(hi).
inline std::complex<double> cis2w(TwoWord t)
{
    const double c = std::cos(t.hi);
    const double s = std::sin(t.hi);
    return {c - s * t.lo, s + c * t.lo};
}

/// exp(-x^2)
inline double exp_neg_sq(double x)
{
    const TwoWord sq = two_prod(x, x);
    return exp2w({-sq.hi, -sq.lo});
}

/// exp(+x^2)
inline double exp_pos_sq(double x)
{
    return exp2w(two_prod(x, x));
}

/// exp(-x^2) in extended precision, for the real-axis paths.
inline long double exp_neg_sq_ext(double x)
{
    const TwoWord sq = two_prod(x, x);
    return std::exp(-static_cast<long double>(sq.hi)) * std::exp(-static_cast<long double>(sq.lo));
}

/// exp(+x^2) in extended precision.
inline long double exp_pos_sq_ext(double x)
{
    const TwoWord sq = two_prod(x, x);
    return std::exp(static_cast<long double>(sq.hi)) * std::exp(static_cast<long double>(sq.lo));
}

/// -z^2 = (y^2 - x^2) - 2ixy with both parts as two-word values.
inline void neg_square(std::complex<double> z, TwoWord& re, TwoWord& im)
{
    const double x = z.real();
    const double y = z.imag();
    const TwoWord xx = two_prod(x, x);
    const TwoWord yy = two_prod(y, y);
    const TwoWord d = two_sum(yy.hi, -xx.hi);
    re = two_sum(d.hi, d.lo + (yy.lo - xx.lo));
    im = two_prod(-2.0 * x, y);
}

/// exp(-z^2)
inline std::complex<double> exp_neg_sq(std::complex<double> z)
{
    TwoWord re{};
    TwoWord im{};
    neg_square(z, re, im);
    const double mag = exp2w(re);
    if (mag == 0.0) {
        return {0.0, 0.0};
    }
    return mag * cis2w(im);
}

/// exp(+z^2)
inline std::complex<double> exp_pos_sq(std::complex<double> z)
{
    TwoWord re{};
    TwoWord im{};
    neg_square(z, re, im);
    const double mag = exp2w({-re.hi, -re.lo});
    if (mag == 0.0) {
        return {0.0, 0.0};
    }
    return mag * cis2w({-im.hi, -im.lo});
}

} // namespace wtrap::detail

#endif // WTRAP_DETAIL_PRECISE_EXP_HPP
