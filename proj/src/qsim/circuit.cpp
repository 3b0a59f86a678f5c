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

#include "unop/qsim/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace unop::qsim {

std::uint64_t read_register(BasisIndex index, const ClassicalRegister &reg) {
    std::uint64_t value = 0;
    for (Wire w : reg.wires) {
        value = (value << 1) | ((index >> w) & 1u);
    }
    return value;
}

std::vector<std::uint64_t> read_registers(BasisIndex index, std::span<const ClassicalRegister> regs) {
    std::vector<std::uint64_t> values;
    values.reserve(regs.size());
    for (const auto &reg : regs) {
        values.push_back(read_register(index, reg));
    }
    return values;
}

BasisIndex write_register(BasisIndex index, const ClassicalRegister &reg, std::uint64_t value) {
    const std::size_t width = reg.wires.size();
    for (std::size_t j = 0; j < width; ++j) {
        const BasisIndex bit = BasisIndex{1} << reg.wires[j];
        if ((value >> (width - 1 - j)) & 1u) {
            index |= bit;
        } else {
            index &= ~bit;
        }
    }
    return index;
}

Circuit::Circuit(std::size_t num_wires) : num_wires_(num_wires) {
    if (num_wires == 0 || num_wires > kMaxWires) {
        throw std::out_of_range("Circuit: wire count must be in [1, " + std::to_string(kMaxWires) + "], got " +
                                std::to_string(num_wires));
    }
}

void Circuit::append(Gate gate) {
    if (gate.max_wire() >= num_wires_) {
        throw std::out_of_range("Circuit: gate " + gate.name() + " references wire " +
                                std::to_string(gate.max_wire()) + " of a " + std::to_string(num_wires_) +
                                "-wire circuit");
    }
    gates_.push_back(std::move(gate));
}

void Circuit::add_register(ClassicalRegister reg) {
    for (Wire w : reg.wires) {
        if (w >= num_wires_) {
            throw std::out_of_range("Circuit: register " + reg.name + " references wire " + std::to_string(w));
        }
    }
    for (const auto &existing : registers_) {
        if (existing.name == reg.name) {
            throw std::invalid_argument("Circuit: duplicate register " + reg.name);
        }
        for (Wire w : reg.wires) {
            if (std::find(existing.wires.begin(), existing.wires.end(), w) != existing.wires.end()) {
                throw std::invalid_argument("Circuit: wire " + std::to_string(w) + " already in register " +
                                            existing.name);
            }
        }
    }
    registers_.push_back(std::move(reg));
}

void Circuit::set_initial_state(BasisIndex index) {
    if (num_wires_ < 64 && (index >> num_wires_) != 0) {
        throw std::out_of_range("Circuit: initial state out of range");
    }
    initial_state_ = index;
}

const ClassicalRegister &Circuit::register_named(std::string_view name) const {
    for (const auto &reg : registers_) {
        if (reg.name == name) {
            return reg;
        }
    }
    throw std::out_of_range("Circuit: no register named " + std::string(name));
}

} // namespace unop::qsim
