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

#ifndef WTRAP_TEST_FIXTURES_HPP
#define WTRAP_TEST_FIXTURES_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "wtrap/reference.hpp"

namespace wtrap::test {

inline std::string fixture_path(const std::string& name)
{
    return std::string(WTRAP_FIXTURE_DIR) + "/" + name;
}

// Tables are cached: the inset file has 58081 rows.
inline const ReferenceTable& fixture(const std::string& name)
{
    static std::unordered_map<std::string, ReferenceTable> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        std::ifstream in(fixture_path(name), std::ios::binary);
        if (!in) {
            throw std::runtime_error("missing fixture " + name);
        }
        it = cache.emplace(name, ReferenceTable::read(in)).first;
    }
    return it->second;
}

// w_inset_241.csv: 241 x 241 on [-6, 6]^2
inline GridSpec inset_grid() { return {-6.0, 6.0, -6.0, 6.0, 241, 241}; }

// w_axes_2001.csv: 2001 real-axis points then 2001 imaginary-axis points,
// both on [-26, 26]
inline GridSpec real_axis_grid() { return {-26.0, 26.0, 0.0, 0.0, 2001, 1}; }

inline double axis_coordinate(int k) { return GridSpec::coordinate(-26.0, 26.0, k, 2001); }

} // namespace wtrap::test

#endif // WTRAP_TEST_FIXTURES_HPP
