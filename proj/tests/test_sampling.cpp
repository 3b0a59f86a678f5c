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

#include "support/random_circuits.hpp"
#include "unop/qsim/sampling.hpp"
#include "unop/unadd.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace unop;
using namespace unop::qsim;

TEST(Sampling, DeterministicStateGivesSingleOutcome) {
    Circuit c(3);
    for (Wire w = 0; w < 3; ++w) {
        c.append(x(w));
    }
    const std::vector<ClassicalRegister> layout{{"all", {2, 1, 0}}};
    const auto r = sample(run(c, Backend::dense), layout, 12345, 3);
    ASSERT_EQ(r.counts.size(), 1u);
    EXPECT_EQ(r.counts.begin()->first, std::vector<std::uint64_t>{7});
    EXPECT_EQ(r.counts.begin()->second, 12345u);
    EXPECT_EQ(r.total_shots, 12345u);
}

TEST(Sampling, RejectsZeroShots) {
    const auto s = QuantumState::basis(1, 0, Backend::sparse);
    EXPECT_THROW(sample_basis(s, 0, 1), std::invalid_argument);
}

TEST(Sampling, FixedSeedIsReproducibleAndThreadIndependent) {
    const auto state = run(unadd::build_full_unadder_circuit({0, 1}), Backend::dense);
    const auto one = sample_basis(state, 300000, 42, 1);
    EXPECT_EQ(one, sample_basis(state, 300000, 42, 1));
    EXPECT_EQ(one, sample_basis(state, 300000, 42, 4));
    EXPECT_NE(one, sample_basis(state, 300000, 43, 1));
}

TEST(Sampling, CountsSumToShots) {
    const auto c = unadd::build_rcu(4, 11);
    const auto r = sample(run(c, Backend::sparse), c.registers(), 70001, 5);
    const auto total = std::accumulate(r.counts.begin(), r.counts.end(), std::uint64_t{0},
                                       [](std::uint64_t acc, const auto &kv) { return acc + kv.second; });
    EXPECT_EQ(total, 70001u);
    EXPECT_EQ(r.register_names, (std::vector<std::string>{"a", "b", "c_in"}));
    for (const auto &[values, _] : r.counts) {
        EXPECT_EQ(values[0] + values[1] + values[2], 11u);
    }
}

TEST(Sampling, FullUnadderBranchFrequenciesNearOneThird) {
    const auto c = unadd::build_full_unadder_circuit({0, 1});
    const std::vector<ClassicalRegister> layout{{"out", {unadd::FullUnadderWires::c_in, unadd::FullUnadderWires::b,
                                                         unadd::FullUnadderWires::a}}};
    const auto r = sample(run(c, Backend::dense), layout, 1000000, 11);
    ASSERT_EQ(r.counts.size(), 3u);
    for (const auto &[values, n] : r.counts) {
        EXPECT_NEAR(static_cast<double>(n) / 1e6, 1.0 / 3.0, 0.005) << values[0];
    }
}

TEST(Sampling, FrequenciesWithinFiveSigma) {
    std::mt19937_64 rng(31337);
    const std::uint64_t shots = 1000000;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Circuit c(4);
        for (int g = 0; g < 8; ++g) {
            c.append(unop::test_support::random_gate(4, 2, 1, rng));
        }
        const auto state = run(c, Backend::dense);
        const auto counts = sample_basis(state, shots, seed);
        for (const auto &e : state.support(0.0)) {
            const double p = std::norm(e.amplitude);
            const auto it = counts.find(e.index);
            const double freq = it == counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
            EXPECT_LT(std::abs(freq - p), 5.0 * std::sqrt(p * (1.0 - p) / shots) + 1e-12)
                << "seed " << seed << " index " << e.index;
        }
    }
}

TEST(SplitMix64, KnownSequence) {
    // Reference values of SplitMix64 seeded with 0.
    std::uint64_t s = 0;
    EXPECT_EQ(splitmix64(s), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(splitmix64(s), 0x6e789e6aa1b965f4ULL);
}
