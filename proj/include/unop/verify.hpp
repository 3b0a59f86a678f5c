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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unop::verify {

/// Perturbs one entry of the optimised gate before checking; used to show
/// that the checks catch a broken matrix.
struct Tamper {
    unsigned row = 0;
    unsigned col = 0;
    double delta = 1e-3;
};

struct VerifyOptions {
    /// 0 skips the sampling checks.
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    std::optional<Tamper> tamper;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline constexpr double kProbabilityTolerance = 1e-10;
inline constexpr double kFrequencyTolerance = 0.005;

/// Gate unitarity, truth-table rows for both full-unadder realizations,
/// realization equivalence, norm preservation and (with shots) sampled
/// frequencies.
std::vector<CheckResult> run_verification(const VerifyOptions &options = {});

} // namespace unop::verify
