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

#include "unop/qsim/circuit.hpp"

#include <cstddef>
#include <unordered_map>
#include <variant>
#include <vector>

namespace unop::qsim {

enum class Backend : std::uint8_t { dense, sparse };

/// Sparse states drop entries whose magnitude falls below this after each gate.
inline constexpr double kPruneThreshold = 1e-12;
/// Dense states allocate 2^n amplitudes; refuse anything larger than this.
inline constexpr std::size_t kMaxDenseWires = 30;

struct SupportEntry {
    BasisIndex index;
    Amplitude amplitude;
};

/**
 * Pure state over num_wires qubits, stored either as a full 2^n amplitude
 * array (dense) or as a hash map holding only the entries with magnitude at
 * or above kPruneThreshold (sparse). Both backends apply gates with the same
 * semantics.
 */
class QuantumState {
  public:
    /// |index>. Throws std::out_of_range for a bad index or wire count.
    static QuantumState basis(std::size_t num_wires, BasisIndex index, Backend backend);

    std::size_t num_wires() const { return num_wires_; }
    Backend backend() const;

    Amplitude amplitude(BasisIndex index) const;
    double norm_squared() const;
    /// Number of amplitudes held in memory (2^n for dense).
    std::size_t stored_entries() const;

    /// Throws std::out_of_range if the gate references a wire >= num_wires().
    void apply(const Gate &gate);

    /// All basis states with |amplitude| > tol, ordered by index.
    std::vector<SupportEntry> support(double tol) const;

  private:
    using Dense = std::vector<Amplitude>;
    using Sparse = std::unordered_map<BasisIndex, Amplitude>;

    QuantumState(std::size_t num_wires, std::variant<Dense, Sparse> storage);

    std::size_t num_wires_;
    std::variant<Dense, Sparse> storage_;
};

QuantumState apply_gate(QuantumState state, const Gate &gate);

/// Applies every gate of the circuit, in order, to its initial basis state.
QuantumState run(const Circuit &circuit, Backend backend);

inline std::vector<SupportEntry> support(const QuantumState &state, double tol) { return state.support(tol); }

} // namespace unop::qsim
