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

// Prints a few values of w and its relatives, and how w is evaluated in each
// region of the plane.

#include <complex>
#include <cstdio>
#include <string>

#include "wtrap/wtrap.hpp"

int main()
{
    const auto& p = wtrap::double_params();
    std::printf("h=%.6f N=%d re_cut=%.4f g=%.4f\n\n", p.h, p.n_terms, p.re_cut, p.g_cut);

    const std::complex<double> points[] = {{0.0, 0.0}, {1.0, 1.0}, {3.0, 0.5}, {8.0, 4.0},
                                           {-2.0, -1.0}, {6.0, -3.0}, {1.0, -7.0}, {0.0, 2.0}};
    for (const auto z : points) {
        const wtrap::WResult r = wtrap::w(z, p);
        std::printf("w(%5.1f%+5.1fi) = %.16e %+.16ei  [%s]\n", z.real(), z.imag(), r.value.real(), r.value.imag(),
                    std::string(wtrap::to_string(r.region)).c_str());
    }

    std::printf("\n");
    for (const double x : {0.5, 1.0, 2.0, 5.0}) {
        std::printf("x=%.1f  erf=%.16e  erfc=%.16e  erfcx=%.16e  dawson=%.16e\n", x, wtrap::erf(x), wtrap::erfc(x),
                    wtrap::erfcx(x), wtrap::dawson(x));
    }
    const auto e = wtrap::erf(std::complex<double>(2.0, 1.0));
    std::printf("\nerf(2+i) = %.16e %+.16ei\n", e.real(), e.imag());
    return 0;
}
