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

#ifndef WTRAP_WTRAP_HPP
#define WTRAP_WTRAP_HPP

#include "wtrap/bench.hpp"
#include "wtrap/errlike.hpp"
#include "wtrap/faddeeva.hpp"
#include "wtrap/reference.hpp"
#include "wtrap/selftest.hpp"
#include "wtrap/trap_engine.hpp"
#include "wtrap/tuning.hpp"

#endif // WTRAP_WTRAP_HPP
