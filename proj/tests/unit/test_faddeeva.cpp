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

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include <boost/math/special_functions/erf.hpp>
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kernels.hpp"
#include "highprec.hpp"
#include "wtrap/faddeeva.hpp"
#include "wtrap/trap_engine.hpp"

namespace {

using cd = std::complex<double>;
using wtrap::deps;
using wtrap::Region;
using wtrap::test::mp;

const wtrap::EvalParams& P() { return wtrap::double_params(); }

double ref_rel_deps(cd z, const std::string& file)
{
    const auto* e = wtrap::test::fixture(file).find(z);
    EXPECT_NE(e, nullptr) << "fixture lacks " << z;
    if (e == nullptr) {
        return std::numeric_limits<double>::infinity();
    }
    return wtrap::relative_error_deps(wtrap::w(z, P()).value, e->w_re, e->w_im);
}

TEST(Classify, Examples)
{
    EXPECT_EQ(wtrap::classify_region({1, 1}, P()), Region::A);
    EXPECT_EQ(wtrap::classify_region({10, 1}, P()), Region::B);
    EXPECT_EQ(wtrap::classify_region({1, 7}, P()), Region::B);
    EXPECT_EQ(wtrap::classify_region({3, -10}, P()), Region::E);
    EXPECT_EQ(wtrap::classify_region({1, -1}, P()), Region::C);
    EXPECT_EQ(wtrap::classify_region({10, -1}, P()), Region::D);
    EXPECT_EQ(wtrap::classify_region({0, 0}, P()), Region::IMAG_AXIS);
    EXPECT_EQ(wtrap::classify_region({0, -3}, P()), Region::IMAG_AXIS);
    EXPECT_EQ(wtrap::classify_region({-2, 0}, P()), Region::REAL_AXIS);
}

TEST(Classify, Boundaries)
{
    const auto& p = P();
    EXPECT_EQ(wtrap::classify_region({1, p.strip_height}, p), Region::A);
    EXPECT_EQ(wtrap::classify_region({1, std::nextafter(p.strip_height, 10.0)}, p), Region::B);
    EXPECT_EQ(wtrap::classify_region({p.re_cut, 1}, p), Region::A);
    EXPECT_EQ(wtrap::classify_region({-std::nextafter(p.re_cut, 10.0), 1}, p), Region::B);
    // Im^2 - Re^2 = 25 - 100 = -75 < -g;  Im^2 - Re^2 = 100 - 36 = 64 > g
    EXPECT_EQ(wtrap::classify_region({-10, -5}, p), Region::D);
    EXPECT_EQ(wtrap::classify_region({-6, -10}, p), Region::E);
    EXPECT_EQ(wtrap::to_string(Region::IMAG_AXIS), "IMAG_AXIS");
}

TEST(WUpper, Origin)
{
    const cd v = wtrap::w_upper({0.0, 0.0}, P());
    EXPECT_EQ(v, cd(1.0, 0.0));
    EXPECT_EQ(wtrap::w({0.0, 0.0}, P()).value, cd(1.0, 0.0));
}

TEST(WUpper, FixturePoints)
{
    EXPECT_LE(ref_rel_deps({1.0, 1.0}, "w_inset_241.csv"), 3.0);
    EXPECT_LE(ref_rel_deps({0.0, 6.0}, "w_inset_241.csv"), 3.0);
    EXPECT_NEAR(wtrap::w({0.0, 6.0}, P()).value.real(), 0.09277656, 1e-8);
    EXPECT_EQ(wtrap::w({0.0, 6.0}, P()).value.imag(), 0.0);
    // off the imaginary-axis fast path
    const cd v = wtrap::w_upper({0.0, 6.0}, P());
    EXPECT_LE(std::abs(v - wtrap::w({0.0, 6.0}, P()).value), 3.0 * deps * std::abs(v));
}

TEST(WUpper, StaggerRuleBoundariesAreSafe)
{
    // frac(|x|/h) exactly 0.25 and 0.75: lattice is used, both sides smooth
    const auto& p = P();
    for (double f : {0.25, 0.75, 1.25, 3.75}) {
        const double x = f * p.h;
        const double below = std::nextafter(x, 0.0);
        for (double y : {0.0, 0.5, 3.0}) {
            const cd a = wtrap::w_upper({x, y}, p);
            const cd b = wtrap::w_upper({below, y}, p);
            EXPECT_TRUE(std::isfinite(a.real()) && std::isfinite(a.imag()));
            EXPECT_LE(std::abs(a - b), 8.0 * deps * std::abs(a)) << x << " " << y;
        }
    }
}

TEST(WUpper, PoleWeightAtStripEdge)
{
    // Im z = pi/h exactly takes half the residue; the function is continuous
    // across, and the residue term is already below eps there.
    const auto& p = P();
    const double y = p.strip_height;
    for (double x : {0.3, 1.7, 4.0}) {
        const cd on = wtrap::w_upper({x, y}, p);
        const cd above = wtrap::w_upper({x, std::nextafter(y, 10.0)}, p);
        const cd below = wtrap::w_upper({x, std::nextafter(y, 0.0)}, p);
        EXPECT_LE(std::abs(on - above), 4.0 * deps * std::abs(on));
        EXPECT_LE(std::abs(on - below), 4.0 * deps * std::abs(on));
    }
}

TEST(W, ReflectionExample)
{
    const cd z{1.0, 1.0};
    const cd a = wtrap::w(z, P()).value;
    const cd b = wtrap::w(-z, P()).value;
    const cd g = 2.0 * std::exp(-z * z);
    EXPECT_LE(std::abs(a + b - g), 5.0 * deps * std::max(std::abs(a), std::abs(g)));
}

TEST(W, GaussianDominatedRegion)
{
    const cd z{3.0, -10.0};
    const wtrap::WResult r = wtrap::w(z, P());
    EXPECT_EQ(r.region, Region::E);
    EXPECT_FALSE(r.overflowed);
    // w = 2 exp(-z^2) - w(-z), the second term 1e-40 relative
    const wtrap::test::mpc e = wtrap::test::exp_neg_sq(wtrap::test::to_mp(z));
    EXPECT_LE(wtrap::test::rel_deps(r.value, {2 * e.re, 2 * e.im}), 1e4);
}

TEST(W, OverflowFlag)
{
    const wtrap::WResult r = wtrap::w({0.0, -30.0}, P());
    EXPECT_TRUE(r.overflowed);
    EXPECT_FALSE(std::isfinite(r.value.real()));

    const wtrap::WResult s = wtrap::w({2.0, -40.0}, P());
    EXPECT_TRUE(s.overflowed);
    EXPECT_FALSE(std::isfinite(s.value.real()) && std::isfinite(s.value.imag()));
}

TEST(W, NonFiniteInput)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    const wtrap::WResult a = wtrap::w({nan, 1.0}, P());
    EXPECT_TRUE(std::isnan(a.value.real()) && std::isnan(a.value.imag()));
    EXPECT_FALSE(a.overflowed);
    const wtrap::WResult b = wtrap::w({inf, 1.0}, P());
    EXPECT_TRUE(std::isnan(b.value.real()) && std::isnan(b.value.imag()));
}

TEST(ErfcxReal, Values)
{
    const auto& p = P();
    EXPECT_EQ(wtrap::erfcx_real(0.0, p), 1.0);
    const mp one(1);
    EXPECT_LE(wtrap::test::rel_deps(wtrap::erfcx_real(1.0, p), exp(one) * boost::math::erfc(one)), 3.0);
    EXPECT_NEAR(wtrap::erfcx_real(1.0, p), 0.42758357615580700, 1e-16);

    const wtrap::EvalParams pa = wtrap::build_params(deps, true, false);
    const mp x(100);
    const mp ref = exp(x * x) * boost::math::erfc(x);
    EXPECT_LE(wtrap::test::rel_deps(wtrap::erfcx_real(100.0, pa), ref), 3.0);
    EXPECT_LE(wtrap::test::rel_deps(wtrap::erfcx_real(100.0, p), ref), 3.0);
}

TEST(ErfcxReal, NegativeArgumentOverflows)
{
    EXPECT_TRUE(std::isfinite(wtrap::erfcx_real(-26.0, P())));
    EXPECT_EQ(wtrap::erfcx_real(-27.0, P()), std::numeric_limits<double>::infinity());
}

TEST(ImWReal, Values)
{
    const auto& p = P();
    EXPECT_EQ(wtrap::im_w_real(0.0, p), 0.0);
    const mp ref = 2 / sqrt(wtrap::test::pi_mp()) * wtrap::test::dawson(mp(1));
    EXPECT_LE(wtrap::test::rel_deps(wtrap::im_w_real(1.0, p), ref), 3.0);
    EXPECT_NEAR(wtrap::im_w_real(1.0, p), 0.6071577058413937, 1e-15);
    EXPECT_EQ(wtrap::im_w_real(-1.0, p), -wtrap::im_w_real(1.0, p));
}

TEST(ImWReal, SmallArgumentsAgainstSeries)
{
    const wtrap::EvalParams pm = wtrap::build_params(deps, false, true);
    for (double x : {1e-300, 1e-12, 1e-4, 0.01, 0.049, 0.05, 0.051, 0.3, 2.5}) {
        const mp ref = 2 / sqrt(wtrap::test::pi_mp()) * wtrap::test::dawson(mp(x));
        EXPECT_LE(wtrap::test::rel_deps(wtrap::im_w_real(x, pm), ref), 3.0) << x;
    }
}

TEST(Asymptotic, AgreesWithQuadrature)
{
    const cd z{0.0, 100.0};
    const cd a = wtrap::w_asymptotic(z, 6);
    const cd b = wtrap::w_upper(z, P());
    EXPECT_LE(std::abs(a - b), 3.0 * deps * std::abs(b));

    const cd lead = wtrap::w_asymptotic(z, 1);
    EXPECT_NEAR(lead.real(), 1.0 / (std::sqrt(std::numbers::pi) * 100.0), 1e-18);
    EXPECT_NEAR(lead.real(), 5.6419e-3, 1e-7);
    EXPECT_LE(std::abs(lead - b), 1e-4 * std::abs(b));
}

TEST(Asymptotic, HighPrecisionReference)
{
    const cd z{40.0, 40.0};
    const wtrap::test::mpc ref = wtrap::test::w_asymptotic(wtrap::test::to_mp(z), 40);
    EXPECT_LE(wtrap::test::rel_deps(wtrap::w_asymptotic(z, 6), ref), 3.0);
}

TEST(Asymptotic, FarFixture)
{
    // 30 <= |z| <= 50 in the sector -pi/4 < arg z < 5pi/4
    for (const auto& e : wtrap::test::fixture("w_far_100.csv").entries()) {
        if (e.z.imag() < 0.0) {
            continue;
        }
        const cd a = wtrap::w_asymptotic(e.z, 6);
        const cd q = wtrap::w_upper(e.z, P());
        EXPECT_LE(std::abs(a - q), 5.0 * deps * std::abs(q)) << e.z;
        EXPECT_LE(wtrap::relative_error_deps(a, e.w_re, e.w_im), 5.0) << e.z;
    }
}

TEST(Asymptotic, FastPathInW)
{
    const wtrap::EvalParams pa = wtrap::build_params(deps, true, false);
    for (const auto& e : wtrap::test::fixture("w_far_100.csv").entries()) {
        const wtrap::WResult r = wtrap::w(e.z, pa);
        if (r.overflowed) {
            continue;
        }
        const double d = wtrap::relative_error_deps(r.value, e.w_re, e.w_im);
        const double cond = std::abs(wtrap::cond_w(e.z, pa));
        if (cond <= 10.0) {
            EXPECT_LE(d, 10.0) << e.z;
        }
    }
}

TEST(Condition, Examples)
{
    EXPECT_EQ(std::abs(wtrap::cond_w({0.0, 0.0}, P())), 0.0);
    const double c1 = std::abs(wtrap::cond_w({10.0, 10.0}, P()));
    EXPECT_GE(c1, 0.5);
    EXPECT_LE(c1, 2.0);
    const double c2 = std::abs(wtrap::cond_w({5.0, -5.0}, P()));
    EXPECT_GE(c2, 50.0);
    EXPECT_LE(c2, 200.0);
}

TEST(Invariants, Reflection)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-15.0, 15.0);
    for (int k = 0; k < 10000; ++k) {
        const cd z{u(rng), u(rng)};
        const cd a = wtrap::w(z, P()).value;
        const cd b = wtrap::w(-z, P()).value;
        const cd g = 2.0 * wtrap::detail::exp_neg_sq(z);
        if (!std::isfinite(std::abs(a)) || !std::isfinite(std::abs(b)) || !std::isfinite(std::abs(g))) {
            continue;
        }
        ASSERT_LE(std::abs(a + b - g), 8.0 * deps * std::max(std::abs(a), std::abs(g))) << z;
    }
}

TEST(Invariants, RealAndImaginaryAxes)
{
    for (int k = 0; k <= 2000; ++k) {
        const double x = wtrap::test::axis_coordinate(k);
        const long double e = std::exp(-static_cast<long double>(x) * x);
        const double re = wtrap::w({x, 0.0}, P()).value.real();
        if (e > std::numeric_limits<double>::min()) {
            EXPECT_LE(std::abs(re - e) / e, 2.0L * deps) << x;
        }
        if (x >= 0.0) {
            const cd v = wtrap::w({0.0, x}, P()).value;
            EXPECT_LE(std::abs(v.imag()), 2.0 * deps * wtrap::erfcx_real(x, P())) << x;
        }
    }
}

TEST(Invariants, ConjugateSymmetry)
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-15.0, 15.0);
    for (int k = 0; k < 10000; ++k) {
        const cd z{u(rng), u(rng)};
        const cd a = wtrap::w(z, P()).value;
        const cd b = wtrap::w(-std::conj(z), P()).value;
        if (!std::isfinite(std::abs(a))) {
            continue;
        }
        ASSERT_LE(std::abs(b - std::conj(a)), 8.0 * deps * std::abs(a)) << z;
    }
}

using wtrap::test::FaddeevaKernel;

TEST(Invariants, EngineEquivalence)
{
    const auto& p = P();
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> re(-9.0, 9.0);
    std::uniform_real_distribution<double> im(0.0, 8.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const cd z{re(rng), im(rng)};
        const bool lattice = wtrap::detail::use_lattice_nodes(wtrap::detail::node_offset(std::abs(z.real()), p.h).frac);
        const wtrap::NodeScheme scheme(p.h, p.n_terms, !lattice);
        const cd engine = wtrap::trap_quadrature(FaddeevaKernel{z}, scheme, {wtrap::detail::pole_correction(z, p)});
        const cd direct = wtrap::w_upper(z, p);
        worst = std::max(worst, std::abs(engine - direct) / (deps * std::abs(direct)));
    }
    EXPECT_LE(worst, 2.0);
}

TEST(Invariants, DirectIntegralOracle)
{
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> r(0.5, 8.0);
    std::uniform_real_distribution<double> a(0.0, std::numbers::pi);
    for (int k = 0; k < 6; ++k) {
        cd z = std::polar(r(rng), a(rng));
        if (z.imag() < 0.5) {
            z.imag(0.5);
        }
        const cd oracle = wtrap::brute_force_integral(FaddeevaKernel{z}, 10.0, 1000000);
        const cd v = wtrap::w(z, P()).value;
        EXPECT_LE(std::abs(v - oracle) / std::abs(v), 1e-12) << z;
    }
}

TEST(Invariants, DenominatorBounds)
{
    const auto& p = P();
    for (int k = 0; k <= 200000; ++k) {
        const double x = 26.0 * k / 200000.0;
        const auto off = wtrap::detail::node_offset(x, p.h);
        const bool lattice = wtrap::detail::use_lattice_nodes(off.frac);
        double gap = std::numeric_limits<double>::infinity();
        if (lattice) {
            gap = std::abs(x); // the h K(0) node
            for (double a : p.node) {
                gap = std::min(gap, std::abs(x - a));
            }
        } else {
            for (double b : p.stag_node) {
                gap = std::min(gap, std::abs(x - b));
            }
        }
        ASSERT_GE(gap, 0.245 * p.h) << x;
        const cd q = std::polar(1.0, -2.0 * std::numbers::pi * x / p.h);
        ASSERT_GE(std::abs(lattice ? 1.0 - q : 1.0 + q), std::numbers::sqrt2 - 1e-12) << x;
    }
}

} // namespace
