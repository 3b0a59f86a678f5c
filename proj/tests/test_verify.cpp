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

#include "unop/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace unop::verify;

namespace {

const CheckResult &find(const std::vector<CheckResult> &checks, const std::string &name) {
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const auto &c) { return c.name == name; });
    if (it == checks.end()) {
        throw std::runtime_error("missing check " + name);
    }
    return *it;
}

} // namespace

TEST(Verify, DefaultRunPassesEveryCheck) {
    const auto checks = run_verification();
    // unitarity + 4 x (gate, circuit, equivalence) + norm
    EXPECT_EQ(checks.size(), 14u);
    for (const auto &c : checks) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    }
}

TEST(Verify, TamperedMatrixFailsUnitarity) {
    const auto checks = run_verification({0, 1, Tamper{2, 2, 1e-3}});
    EXPECT_FALSE(find(checks, "gate_unitarity").passed);
    EXPECT_FALSE(find(checks, "truth_table_gate (c_out=0,sum=1)").passed);
    EXPECT_TRUE(find(checks, "truth_table_circuit (c_out=0,sum=1)").passed);
    EXPECT_THROW(run_verification({0, 1, Tamper{8, 0, 1.0}}), std::out_of_range);
}

TEST(Verify, SamplingChecksStayWithinTolerance) {
    const auto checks = run_verification({1000000, 1, std::nullopt});
    EXPECT_EQ(checks.size(), 18u);
    for (const auto &c : checks) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    }
}
