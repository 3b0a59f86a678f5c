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

#include "unop/common.hpp"
#include "unop/qsim/circuit.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace unop::unmult {

/**
 * Wire assignment of an n-bit unmultiplier.
 *
 * product[0..2n) holds p_0 (MSB) .. p_{2n-1}. RCU i (0-based) uses
 * product[i] as carry and product[i+1 .. i+n] as sum, so after the circuit
 * product[i] holds RCU i's c_in and product[n..2n) holds the last RCU's b
 * output (const0). x_registers[i] are RCU i's ancillas; y[i] is the factor
 * bit reconstructed for RCU i, y[0] being the MSB of y.
 */
struct UnmultLayout {
    unsigned n_bits = 0;
    std::vector<qsim::Wire> product;
    std::vector<std::vector<qsim::Wire>> x_registers;
    std::vector<qsim::Wire> y;

    std::size_t total_wires() const;
    qsim::Wire carry_wire(unsigned rcu) const { return product[rcu]; }
    std::vector<qsim::Wire> const0_wires() const;
};

/// n^2 + 3n.
std::size_t unmultiplier_wire_count(unsigned n_bits);

UnmultLayout make_layout(unsigned n_bits);

struct UnmultCircuit {
    qsim::Circuit circuit;
    UnmultLayout layout;
};

/// Throws std::out_of_range unless 1 <= n_bits <= 6 and product < 2^(2 n_bits).
UnmultCircuit build_unmultiplier(unsigned n_bits, std::uint64_t product);

/// Classical register values of one measured outcome.
struct RawOutcome {
    std::vector<std::uint32_t> c_in; ///< one per RCU
    std::vector<std::uint64_t> x;    ///< one per RCU
    std::uint64_t y = 0;
    std::uint64_t const0 = 0;
};

RawOutcome decode(qsim::BasisIndex index, const UnmultLayout &layout);

/// Predicates in evaluation order.
enum class Rejection : std::uint8_t { const0_nonzero = 0, carry_nonzero = 1, x_inconsistent = 2 };
inline constexpr std::size_t kRejectionKinds = 3;

std::string_view rejection_name(Rejection r);

using PostprocessResult = std::variant<FactorPair, Rejection>;

/// Accepts iff const0 == 0, every c_in == 0 and all non-zero x registers agree.
PostprocessResult postprocess(const RawOutcome &outcome);

struct WeightedPair {
    FactorPair pair;
    double probability = 0.0; ///< exact mode: aggregated mass
    std::uint64_t count = 0;  ///< sample mode
};

struct UnmultResult {
    std::vector<WeightedPair> pairs; ///< sorted by pair
    /// Exact: accepted probability mass. Sample: accepted shot fraction.
    double post_selection_probability = 0.0;
    std::array<double, kRejectionKinds> rejected_probability{};
    std::array<std::uint64_t, kRejectionKinds> rejected_count{};
    /// Support size (exact) or number of distinct observed outcomes (sample).
    std::size_t outcomes_examined = 0;
    bool sampled = false;
    std::uint64_t shots = 0;

    std::vector<FactorPair> factor_pairs() const;
};

UnmultResult unmultiply(std::uint64_t product, unsigned n_bits, const RunOptions &options = {});

} // namespace unop::unmult
