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

#include "unop/qsim/gate.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unop::qsim {

/// Computational basis label. Wire i contributes bit i.
using BasisIndex = std::uint64_t;

inline constexpr std::size_t kMaxWires = 63;

/// Named group of wires measured into one unsigned value, MSB first.
struct ClassicalRegister {
    std::string name;
    std::vector<Wire> wires;
};

/// Value of `reg` in basis state `index` (wires[0] is the most significant bit).
std::uint64_t read_register(BasisIndex index, const ClassicalRegister &reg);
std::vector<std::uint64_t> read_registers(BasisIndex index, std::span<const ClassicalRegister> regs);

/// Writes `value` into the register's wires of `index`.
BasisIndex write_register(BasisIndex index, const ClassicalRegister &reg, std::uint64_t value);

class Circuit {
  public:
    explicit Circuit(std::size_t num_wires);

    /// Throws std::out_of_range if the gate touches a wire >= num_wires().
    void append(Gate gate);

    /// Throws std::invalid_argument on duplicate names or wires shared with an
    /// existing register, std::out_of_range on invalid wires.
    void add_register(ClassicalRegister reg);

    void set_initial_state(BasisIndex index);

    std::size_t num_wires() const { return num_wires_; }
    const std::vector<Gate> &gates() const { return gates_; }
    const std::vector<ClassicalRegister> &registers() const { return registers_; }
    BasisIndex initial_state() const { return initial_state_; }

    /// Throws std::out_of_range if absent.
    const ClassicalRegister &register_named(std::string_view name) const;

  private:
    std::size_t num_wires_;
    std::vector<Gate> gates_;
    std::vector<ClassicalRegister> registers_;
    BasisIndex initial_state_ = 0;
};

} // namespace unop::qsim
