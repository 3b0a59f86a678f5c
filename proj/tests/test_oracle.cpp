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

#include "support/brute_force.hpp"
#include "unop/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace unop;
using oracle::AdderResult;

TEST(FullAdder, TruthTableExamples) {
    EXPECT_EQ(oracle::full_adder(0, 0, 0), (AdderResult{0, 0}));
    EXPECT_EQ(oracle::full_adder(1, 1, 0), (AdderResult{0, 1}));
    EXPECT_EQ(oracle::full_adder(1, 1, 1), (AdderResult{1, 1}));
}

TEST(FullAdder, CarryHasWeightTwo) {
    for (unsigned a = 0; a < 2; ++a) {
        for (unsigned b = 0; b < 2; ++b) {
            for (unsigned c = 0; c < 2; ++c) {
                const auto r = oracle::full_adder(a, b, c);
                EXPECT_EQ(a + b + c, r.sum_bit + 2 * r.carry_out);
            }
        }
    }
}

TEST(FullAdder, RejectsNonBits) { EXPECT_THROW(oracle::full_adder(2, 0, 0), std::invalid_argument); }

TEST(UnaddOracle, SumThreeTwoBits) {
    const std::vector<Triple> want{{0, 2, 1}, {0, 3, 0}, {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {3, 0, 0}};
    EXPECT_EQ(oracle::unadd_oracle(3, 2), want);
}

TEST(UnaddOracle, ZeroHasOnlyTheTrivialTriple) {
    EXPECT_EQ(oracle::unadd_oracle(0, 3), (std::vector<Triple>{{0, 0, 0}}));
}

TEST(UnaddOracle, SixThreeBits) {
    const auto got = oracle::unadd_oracle(6, 3);
    EXPECT_EQ(got.size(), 13u);
    EXPECT_EQ(got.front(), (Triple{0, 5, 1}));
    EXPECT_EQ(got.back(), (Triple{6, 0, 0}));
}

TEST(UnaddOracle, OutOfRange) {
    EXPECT_THROW(oracle::unadd_oracle(4, 2), std::out_of_range);
    EXPECT_THROW(oracle::unadd_oracle(0, 0), std::out_of_range);
}

TEST(UnaddOracle, MatchesExhaustiveEnumerationAndCardinality) {
    for (unsigned n = 1; n <= 6; ++n) {
        for (std::uint64_t sum = 0; sum < (1u << n); ++sum) {
            const auto got = oracle::unadd_oracle(sum, n);
            ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
            ASSERT_EQ(test_support::as_set(got), test_support::brute_force_unadd(sum, n)) << "n=" << n << " sum=" << sum;
            ASSERT_EQ(got.size(), sum == 0 ? 1u : 2 * sum + 1);
        }
    }
}

TEST(FactorPairsOracle, Examples) {
    EXPECT_EQ(oracle::factor_pairs_oracle(6, 3), (std::vector<FactorPair>{{1, 6}, {2, 3}, {3, 2}, {6, 1}}));
    EXPECT_EQ(oracle::factor_pairs_oracle(0, 2),
              (std::vector<FactorPair>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}}));
    EXPECT_EQ(oracle::factor_pairs_oracle(15, 3), (std::vector<FactorPair>{{3, 5}, {5, 3}}));
    EXPECT_TRUE(oracle::factor_pairs_oracle(13, 3).empty());
}

TEST(FactorPairsOracle, OutOfRange) { EXPECT_THROW(oracle::factor_pairs_oracle(64, 3), std::out_of_range); }

TEST(FactorPairsOracle, MatchesExhaustiveEnumerationAndIsSymmetric) {
    for (unsigned n = 1; n <= 4; ++n) {
        for (std::uint64_t p = 0; p < (1u << (2 * n)); ++p) {
            const auto got = oracle::factor_pairs_oracle(p, n);
            ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
            const auto set = test_support::as_set(got);
            ASSERT_EQ(set, test_support::brute_force_factor_pairs(p, n)) << "n=" << n << " p=" << p;
            for (const auto &pair : got) {
                ASSERT_TRUE(set.contains({pair.y, pair.x}));
            }
        }
    }
}
