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

#include <cstdint>
#include <vector>

namespace unop::unadd {

/**
 * The optimised 3-qubit full-unadder. Input basis index is
 * 4*c_out + 2*sum + ancilla (ancilla expected |0>); output basis index is
 * 4*c_in + 2*b + a. Only columns 0, 2, 4 and 6 carry meaning, the others
 * complete the unitary.
 */
qsim::Matrix full_unadder_matrix();

/// The full-unadder on (carry, sum, ancilla); afterwards they hold (c_in, b, a).
qsim::Gate full_unadder_gate(qsim::Wire carry, qsim::Wire sum, qsim::Wire ancilla);

struct FullUnadderInput {
    unsigned c_out = 0;
    unsigned sum = 0;
};

/// Wire assignment of the 5-qubit realization.
struct FullUnadderWires {
    static constexpr qsim::Wire c_out = 0;
    static constexpr qsim::Wire sum = 1;
    static constexpr qsim::Wire c_in = 2;
    static constexpr qsim::Wire b = 3;
    static constexpr qsim::Wire a = 4;
};

/// 5-qubit full-unadder built from controlled Ry, controlled H and
/// (multi-)controlled X, one section per non-trivial (c_out, sum) input.
/// Registers: c_out, sum, c_in, b, a.
qsim::Circuit build_full_unadder_circuit(FullUnadderInput input = {});

/// 3-qubit circuit holding only full_unadder_gate(0, 1, 2).
/// Registers: c_in (wire 0), b (wire 1), a (wire 2).
qsim::Circuit build_full_unadder_gate_circuit(FullUnadderInput input = {});

struct RcuWires {
    qsim::Wire carry;
    std::vector<qsim::Wire> sum;     ///< MSB first; become b
    std::vector<qsim::Wire> ancilla; ///< MSB first, start |0>; become a
};

/// Chains one full-unadder per sum bit, MSB first, threading the carry wire
/// through every stage. Leaves the final c_in on the carry wire.
void append_rcu(qsim::Circuit &circuit, const RcuWires &wires);

/// Wire layout of build_rcu: carry = 0, sum bits 1..n, ancillas n+1..2n.
RcuWires rcu_wires(unsigned n_bits);

/**
 * Ripple-carry unadder for an n_bits sum on 2*n_bits + 1 wires. The sum is
 * prepared by X gates; registers a, b and c_in expose the result.
 * Throws std::out_of_range unless 1 <= n_bits <= 31 and sum_value < 2^n_bits.
 */
qsim::Circuit build_rcu(unsigned n_bits, std::uint64_t sum_value);

struct WeightedTriple {
    Triple triple;
    double probability = 0.0; ///< exact mode
    std::uint64_t count = 0;  ///< sample mode
};

struct UnaddResult {
    std::vector<WeightedTriple> entries; ///< sorted by triple
    bool sampled = false;
    std::uint64_t shots = 0;

    std::vector<Triple> triples() const;
};

UnaddResult unadd(std::uint64_t sum_value, unsigned n_bits, const RunOptions &options = {});

} // namespace unop::unadd
