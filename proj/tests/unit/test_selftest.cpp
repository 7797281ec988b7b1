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

#include <set>
#include <string>

#include <gtest/gtest.h>

#include "wtrap/selftest.hpp"

namespace {

TEST(Selftest, AllChecksPassWithTunedParameters)
{
    const auto results = wtrap::run_selftest(wtrap::double_params());
    std::set<std::string> names;
    for (const auto& c : results) {
        EXPECT_TRUE(c.passed) << c.name << " worst=" << c.worst << " tol=" << c.tolerance;
        names.insert(c.name);
    }
    for (const char* n : {"reflection", "erf_plus_erfc", "derivative_identity", "real_part_on_real_axis",
                          "imaginary_axis_real", "node_distance", "pole_denominator", "conjugate_symmetry"}) {
        EXPECT_TRUE(names.count(n)) << n;
    }
}

TEST(Selftest, ReferenceFreeUnderCoarseStep)
{
    // h = 0.9 costs about ten digits of accuracy but breaks no identity
    const auto p = wtrap::build_params_with_step(wtrap::deps, 0.9);
    for (const auto& c : wtrap::run_selftest(p)) {
        EXPECT_TRUE(c.passed) << c.name << " worst=" << c.worst << " tol=" << c.tolerance;
    }
}

TEST(Selftest, DerivativeCheckDetectsWrongFunction)
{
    // Without the residue term the quadrature sum is a different analytic
    // function near the real axis.
    auto p = wtrap::build_params(wtrap::deps);
    p.strip_height = 0.0;
    p.re_cut = 0.0;
    const auto c = wtrap::check_derivative(p);
    EXPECT_FALSE(c.passed);
}

TEST(Selftest, LooserTarget)
{
    for (const auto& c : wtrap::run_selftest(wtrap::build_params(1e-8))) {
        EXPECT_TRUE(c.passed) << c.name;
    }
}

} // namespace
