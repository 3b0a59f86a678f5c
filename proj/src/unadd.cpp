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

#include "unop/unadd.hpp"

#include "unop/qsim/sampling.hpp"
#include "unop/qsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unop::unadd {

using qsim::Circuit;
using qsim::Control;
using qsim::Gate;
using qsim::Wire;

qsim::Matrix full_unadder_matrix() {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    const double r6 = 1.0 / std::sqrt(6.0);
    const double t6 = 2.0 / std::sqrt(6.0);
    // clang-format off
    return qsim::Matrix(8, {
        1, 0,   0,  0,   0,   0,  0,   0,
        0, r2,  r3, -r6, 0,   0,  0,   0,
        0, -r2, r3, -r6, 0,   0,  0,   0,
        0, 0,   0,  0,   r3,  r2, 0,   -r6,
        0, 0,   r3, t6,  0,   0,  0,   0,
        0, 0,   0,  0,   r3, -r2, 0,   -r6,
        0, 0,   0,  0,   r3,  0,  0,   t6,
        0, 0,   0,  0,   0,   0,  1,   0,
    });
    // clang-format on
}

Gate full_unadder_gate(Wire carry, Wire sum, Wire ancilla) {
    return Gate("full_unadder", full_unadder_matrix(), {carry, sum, ancilla});
}

namespace {

void check_input(FullUnadderInput input) {
    if (input.c_out > 1 || input.sum > 1) {
        throw std::invalid_argument("full-unadder input bits must be 0 or 1");
    }
}

/// Equal superposition of |100>, |010>, |001> on (c_in, b, a), under `section` controls.
void append_one_hot_split(Circuit &c, const std::vector<Control> &section) {
    using W = FullUnadderWires;
    auto with = [&](std::initializer_list<Control> extra) {
        std::vector<Control> all = section;
        all.insert(all.end(), extra);
        return all;
    };
    // c_in = 1 with probability 1/3.
    c.append(qsim::ry(2.0 * std::acos(std::sqrt(2.0 / 3.0)), W::c_in, section));
    // Otherwise split evenly between b and a.
    c.append(qsim::h(W::b, with({qsim::neg(W::c_in)})));
    c.append(qsim::x(W::a, with({qsim::neg(W::c_in), qsim::neg(W::b)})));
}

void append_flip_outputs(Circuit &c, const std::vector<Control> &section) {
    using W = FullUnadderWires;
    for (Wire w : {W::c_in, W::b, W::a}) {
        c.append(qsim::x(w, section));
    }
}

} // namespace

Circuit build_full_unadder_circuit(FullUnadderInput input) {
    check_input(input);
    using W = FullUnadderWires;
    Circuit c(5);

    // (0, 0) is the identity; each remaining input gets its own section.
    append_one_hot_split(c, {qsim::neg(W::c_out), qsim::pos(W::sum)});

    // (1, 0): complement of the one-hot split gives {011, 101, 110}.
    const std::vector<Control> carry_only{qsim::pos(W::c_out), qsim::neg(W::sum)};
    append_one_hot_split(c, carry_only);
    append_flip_outputs(c, carry_only);

    append_flip_outputs(c, {qsim::pos(W::c_out), qsim::pos(W::sum)});

    c.add_register({"c_out", {W::c_out}});
    c.add_register({"sum", {W::sum}});
    c.add_register({"c_in", {W::c_in}});
    c.add_register({"b", {W::b}});
    c.add_register({"a", {W::a}});
    c.set_initial_state((qsim::BasisIndex{input.c_out} << W::c_out) | (qsim::BasisIndex{input.sum} << W::sum));
    return c;
}

Circuit build_full_unadder_gate_circuit(FullUnadderInput input) {
    check_input(input);
    Circuit c(3);
    c.append(full_unadder_gate(0, 1, 2));
    c.add_register({"c_in", {0}});
    c.add_register({"b", {1}});
    c.add_register({"a", {2}});
    c.set_initial_state(qsim::BasisIndex{input.c_out} | (qsim::BasisIndex{input.sum} << 1));
    return c;
}

void append_rcu(Circuit &circuit, const RcuWires &wires) {
    if (wires.sum.size() != wires.ancilla.size() || wires.sum.empty()) {
        throw std::invalid_argument("append_rcu: sum and ancilla widths must match and be non-zero");
    }
    for (std::size_t i = 0; i < wires.sum.size(); ++i) {
        circuit.append(full_unadder_gate(wires.carry, wires.sum[i], wires.ancilla[i]));
    }
}

RcuWires rcu_wires(unsigned n_bits) {
    RcuWires w{0, {}, {}};
    for (unsigned i = 0; i < n_bits; ++i) {
        w.sum.push_back(1 + i);
        w.ancilla.push_back(1 + n_bits + i);
    }
    return w;
}

Circuit build_rcu(unsigned n_bits, std::uint64_t sum_value) {
    if (n_bits == 0 || 2 * std::size_t{n_bits} + 1 > qsim::kMaxWires) {
        throw std::out_of_range("build_rcu: n_bits must be in [1, 31], got " + std::to_string(n_bits));
    }
    if ((sum_value >> n_bits) != 0) {
        throw std::out_of_range("build_rcu: sum " + std::to_string(sum_value) + " does not fit in " +
                                std::to_string(n_bits) + " bits");
    }
    const RcuWires w = rcu_wires(n_bits);
    Circuit c(2 * n_bits + 1);
    for (unsigned i = 0; i < n_bits; ++i) {
        if ((sum_value >> (n_bits - 1 - i)) & 1u) {
            c.append(qsim::x(w.sum[i]));
        }
    }
    append_rcu(c, w);
    c.add_register({"a", w.ancilla});
    c.add_register({"b", w.sum});
    c.add_register({"c_in", {w.carry}});
    return c;
}

std::vector<Triple> UnaddResult::triples() const {
    std::vector<Triple> out;
    out.reserve(entries.size());
    for (const auto &e : entries) {
        out.push_back(e.triple);
    }
    return out;
}

UnaddResult unadd(std::uint64_t sum_value, unsigned n_bits, const RunOptions &options) {
    const Circuit circuit = build_rcu(n_bits, sum_value);
    const auto &reg_a = circuit.register_named("a");
    const auto &reg_b = circuit.register_named("b");
    const auto &reg_c = circuit.register_named("c_in");
    auto decode = [&](qsim::BasisIndex index) {
        return Triple{qsim::read_register(index, reg_a), qsim::read_register(index, reg_b),
                      static_cast<std::uint32_t>(qsim::read_register(index, reg_c))};
    };

    const qsim::QuantumState state = qsim::run(circuit, options.backend);
    UnaddResult result;
    if (const auto *sampling = std::get_if<SampleMode>(&options.mode)) {
        result.sampled = true;
        result.shots = sampling->shots;
        for (const auto &[index, n] : qsim::sample_basis(state, sampling->shots, sampling->seed, options.threads)) {
            result.entries.push_back({decode(index), 0.0, n});
        }
    } else {
        for (const auto &e : state.support(kSupportTolerance)) {
            result.entries.push_back({decode(e.index), std::norm(e.amplitude), 0});
        }
    }
    // Every wire is measured, so each basis index maps to a distinct triple.
    std::sort(result.entries.begin(), result.entries.end(),
              [](const WeightedTriple &l, const WeightedTriple &r) { return l.triple < r.triple; });
    return result;
}

} // namespace unop::unadd
