// Copyright 2026 The unop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "unop/qsim/state.hpp"

#include <compare>
#include <cstdint>
#include <variant>

namespace unop {

/// One element of an unaddition set: a + b + c_in = sum.
struct Triple {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint32_t c_in = 0;

    friend auto operator<=>(const Triple &, const Triple &) = default;
};

/// One element of an unmultiplication set: x * y = product.
struct FactorPair {
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    friend auto operator<=>(const FactorPair &, const FactorPair &) = default;
};

/// Read the result off the exact final-state support.
struct ExactMode {};

/// Read the result off `shots` seeded terminal measurements.
struct SampleMode {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

using RunMode = std::variant<ExactMode, SampleMode>;

struct RunOptions {
    RunMode mode = ExactMode{};
    qsim::Backend backend = qsim::Backend::sparse;
    /// Sampling threads; 0 means hardware concurrency.
    unsigned threads = 0;
};

/// Magnitude below which exact-mode decoding ignores a basis state.
inline constexpr double kSupportTolerance = 1e-10;

} // namespace unop
