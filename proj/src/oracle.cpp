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

#include "unop/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace unop::oracle {

AdderResult full_adder(unsigned a, unsigned b, unsigned c_in) {
    if (a > 1 || b > 1 || c_in > 1) {
        throw std::invalid_argument("full_adder: inputs must be bits");
    }
    const unsigned total = a + b + c_in;
    return {total % 2, total / 2};
}

std::vector<Triple> unadd_oracle(std::uint64_t sum_value, unsigned n_bits) {
    if (n_bits == 0 || n_bits > 62 || (sum_value >> n_bits) != 0) {
        throw std::out_of_range("unadd_oracle: sum out of range");
    }
    const std::uint64_t limit = std::uint64_t{1} << n_bits;
    std::vector<Triple> out;
    for (std::uint64_t a = 0; a <= sum_value; ++a) {
        for (std::uint32_t c = 0; c <= 1; ++c) {
            if (a + c > sum_value) {
                continue;
            }
            const std::uint64_t b = sum_value - a - c;
            if (a < limit && b < limit) {
                out.push_back({a, b, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FactorPair> factor_pairs_oracle(std::uint64_t product, unsigned n_bits) {
    if (n_bits == 0 || n_bits > 31 || (product >> (2 * n_bits)) != 0) {
        throw std::out_of_range("factor_pairs_oracle: product out of range");
    }
    const std::uint64_t limit = std::uint64_t{1} << n_bits;
    std::vector<FactorPair> out;
    for (std::uint64_t x = 0; x < limit; ++x) {
        if (x == 0) {
            if (product == 0) {
                for (std::uint64_t y = 0; y < limit; ++y) {
                    out.push_back({0, y});
                }
            }
            continue;
        }
        if (product % x == 0 && product / x < limit) {
            out.push_back({x, product / x});
        }
    }
    return out;
}

} // namespace unop::oracle
