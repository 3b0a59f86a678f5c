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

#include "unop/qsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace unop::qsim {

namespace {

/// Gate data pre-resolved against global basis indices.
struct Kernel {
    std::size_t arity = 0;
    BasisIndex target_mask = 0;
    BasisIndex control_mask = 0;
    BasisIndex control_value = 0;
    /// offsets[l]: bits set in the global index for local target index l.
    std::vector<BasisIndex> offsets;
    /// Non-zero entries of each matrix column as (row, value).
    std::vector<std::vector<std::pair<std::size_t, Amplitude>>> columns;

    explicit Kernel(const Gate &gate) {
        const auto &targets = gate.targets();
        arity = targets.size();
        const std::size_t dim = std::size_t{1} << arity;
        for (Wire t : targets) {
            target_mask |= BasisIndex{1} << t;
        }
        for (const Control &c : gate.controls()) {
            control_mask |= BasisIndex{1} << c.wire;
            if (c.polarity == Polarity::positive) {
                control_value |= BasisIndex{1} << c.wire;
            }
        }
        offsets.resize(dim);
        for (std::size_t l = 0; l < dim; ++l) {
            BasisIndex off = 0;
            for (std::size_t j = 0; j < arity; ++j) {
                if ((l >> (arity - 1 - j)) & 1u) {
                    off |= BasisIndex{1} << targets[j];
                }
            }
            offsets[l] = off;
        }
        columns.resize(dim);
        const Matrix &m = gate.matrix();
        for (std::size_t c = 0; c < dim; ++c) {
            for (std::size_t r = 0; r < dim; ++r) {
                if (m(r, c) != Amplitude{}) {
                    columns[c].emplace_back(r, m(r, c));
                }
            }
        }
    }

    bool controls_match(BasisIndex index) const { return (index & control_mask) == control_value; }

    std::size_t local_index(BasisIndex index, const std::vector<Wire> &targets) const {
        std::size_t l = 0;
        for (Wire t : targets) {
            l = (l << 1) | ((index >> t) & 1u);
        }
        return l;
    }
};

void check_wires(const Gate &gate, std::size_t num_wires) {
    if (gate.max_wire() >= num_wires) {
        throw std::out_of_range("apply_gate: gate " + gate.name() + " references wire " +
                                std::to_string(gate.max_wire()) + " but the state has " + std::to_string(num_wires));
    }
}

void apply_dense(std::vector<Amplitude> &amps, std::size_t num_wires, const Gate &gate) {
    const Kernel k(gate);
    const std::size_t dim = k.offsets.size();

    // Positions fixed per block (targets and controls), ascending, so zero bits
    // can be inserted into a free-bit counter to enumerate block bases.
    std::vector<Wire> fixed(gate.targets());
    for (const Control &c : gate.controls()) {
        fixed.push_back(c.wire);
    }
    std::sort(fixed.begin(), fixed.end());
    const std::size_t free_bits = num_wires - fixed.size();
    const BasisIndex blocks = BasisIndex{1} << free_bits;
    const Matrix &m = gate.matrix();

    std::vector<Amplitude> in(dim);
    for (BasisIndex i = 0; i < blocks; ++i) {
        BasisIndex base = i;
        for (Wire p : fixed) {
            base = ((base >> p) << (p + 1)) | (base & ((BasisIndex{1} << p) - 1));
        }
        base |= k.control_value;
        bool any = false;
        for (std::size_t l = 0; l < dim; ++l) {
            in[l] = amps[base | k.offsets[l]];
            any = any || in[l] != Amplitude{};
        }
        if (!any) {
            continue;
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Amplitude acc{};
            for (std::size_t c = 0; c < dim; ++c) {
                acc += m(r, c) * in[c];
            }
            amps[base | k.offsets[r]] = acc;
        }
    }
}

void apply_sparse(std::unordered_map<BasisIndex, Amplitude> &amps, const Gate &gate) {
    const Kernel k(gate);
    std::unordered_map<BasisIndex, Amplitude> out;
    out.reserve(amps.size());
    for (const auto &[index, amp] : amps) {
        if (!k.controls_match(index)) {
            out[index] += amp;
            continue;
        }
        const BasisIndex base = index & ~k.target_mask;
        for (const auto &[row, value] : k.columns[k.local_index(index, gate.targets())]) {
            out[base | k.offsets[row]] += value * amp;
        }
    }
    std::erase_if(out, [](const auto &kv) { return std::abs(kv.second) < kPruneThreshold; });
    amps = std::move(out);
}

} // namespace

QuantumState::QuantumState(std::size_t num_wires, std::variant<Dense, Sparse> storage)
    : num_wires_(num_wires), storage_(std::move(storage)) {}

QuantumState QuantumState::basis(std::size_t num_wires, BasisIndex index, Backend backend) {
    if (num_wires == 0 || num_wires > kMaxWires) {
        throw std::out_of_range("QuantumState: wire count must be in [1, " + std::to_string(kMaxWires) + "]");
    }
    if ((index >> num_wires) != 0) {
        throw std::out_of_range("QuantumState: basis index out of range");
    }
    if (backend == Backend::dense) {
        if (num_wires > kMaxDenseWires) {
            throw std::out_of_range("QuantumState: " + std::to_string(num_wires) +
                                    " wires exceeds the dense backend limit of " + std::to_string(kMaxDenseWires));
        }
        Dense amps(std::size_t{1} << num_wires);
        amps[index] = 1.0;
        return QuantumState(num_wires, std::move(amps));
    }
    Sparse amps;
    amps.emplace(index, 1.0);
    return QuantumState(num_wires, std::move(amps));
}

Backend QuantumState::backend() const {
    return std::holds_alternative<Dense>(storage_) ? Backend::dense : Backend::sparse;
}

Amplitude QuantumState::amplitude(BasisIndex index) const {
    if ((index >> num_wires_) != 0) {
        throw std::out_of_range("QuantumState::amplitude: index out of range");
    }
    if (const auto *dense = std::get_if<Dense>(&storage_)) {
        return (*dense)[index];
    }
    const auto &sparse = std::get<Sparse>(storage_);
    const auto it = sparse.find(index);
    return it == sparse.end() ? Amplitude{} : it->second;
}

double QuantumState::norm_squared() const {
    double total = 0.0;
    if (const auto *dense = std::get_if<Dense>(&storage_)) {
        for (const Amplitude &a : *dense) {
            total += std::norm(a);
        }
    } else {
        for (const auto &[_, a] : std::get<Sparse>(storage_)) {
            total += std::norm(a);
        }
    }
    return total;
}

std::size_t QuantumState::stored_entries() const {
    return std::visit([](const auto &s) { return s.size(); }, storage_);
}

void QuantumState::apply(const Gate &gate) {
    check_wires(gate, num_wires_);
    if (auto *dense = std::get_if<Dense>(&storage_)) {
        apply_dense(*dense, num_wires_, gate);
    } else {
        apply_sparse(std::get<Sparse>(storage_), gate);
    }
}

std::vector<SupportEntry> QuantumState::support(double tol) const {
    if (tol < 0.0) {
        throw std::invalid_argument("support: tolerance must be non-negative");
    }
    std::vector<SupportEntry> out;
    if (const auto *dense = std::get_if<Dense>(&storage_)) {
        for (BasisIndex i = 0; i < dense->size(); ++i) {
            if (std::abs((*dense)[i]) > tol) {
                out.push_back({i, (*dense)[i]});
            }
        }
        return out;
    }
    const auto &sparse = std::get<Sparse>(storage_);
    out.reserve(sparse.size());
    for (const auto &[index, amp] : sparse) {
        if (std::abs(amp) > tol) {
            out.push_back({index, amp});
        }
    }
    std::sort(out.begin(), out.end(), [](const SupportEntry &l, const SupportEntry &r) { return l.index < r.index; });
    return out;
}

QuantumState apply_gate(QuantumState state, const Gate &gate) {
    state.apply(gate);
    return state;
}

QuantumState run(const Circuit &circuit, Backend backend) {
    QuantumState state = QuantumState::basis(circuit.num_wires(), circuit.initial_state(), backend);
    for (const Gate &gate : circuit.gates()) {
        state.apply(gate);
    }
    return state;
}

} // namespace unop::qsim
