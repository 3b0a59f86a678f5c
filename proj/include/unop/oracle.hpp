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

// Classical brute-force references. Nothing here touches the simulator.

#include "unop/common.hpp"

#include <cstdint>
#include <vector>

namespace unop::oracle {

struct AdderResult {
    unsigned sum_bit;
    unsigned carry_out;

    friend bool operator==(const AdderResult &, const AdderResult &) = default;
};

/// a + b + c_in = sum_bit + 2 * carry_out. Inputs must be 0 or 1.
AdderResult full_adder(unsigned a, unsigned b, unsigned c_in);

/// Every (a, b, c_in) with a, b < 2^n_bits, c_in in {0, 1} and a + b + c_in = sum_value, sorted.
std::vector<Triple> unadd_oracle(std::uint64_t sum_value, unsigned n_bits);

/// Every (x, y) with x, y < 2^n_bits and x * y = product, sorted.
std::vector<FactorPair> factor_pairs_oracle(std::uint64_t product, unsigned n_bits);

} // namespace unop::oracle
