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

#include "unop/unmult.hpp"

#include "unop/qsim/sampling.hpp"
#include "unop/qsim/state.hpp"
#include "unop/unadd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace unop::unmult {

using qsim::Wire;

std::size_t UnmultLayout::total_wires() const {
    return product.size() + x_registers.size() * n_bits + y.size();
}

std::vector<Wire> UnmultLayout::const0_wires() const {
    return {product.begin() + n_bits, product.end()};
}

std::size_t unmultiplier_wire_count(unsigned n_bits) {
    const std::size_t n = n_bits;
    return n * n + 3 * n;
}

UnmultLayout make_layout(unsigned n_bits) {
    if (n_bits == 0 || unmultiplier_wire_count(n_bits) > qsim::kMaxWires) {
        throw std::out_of_range("unmultiplier: n_bits must be in [1, 6], got " + std::to_string(n_bits));
    }
    UnmultLayout layout;
    layout.n_bits = n_bits;
    Wire next = 0;
    for (unsigned j = 0; j < 2 * n_bits; ++j) {
        layout.product.push_back(next++);
    }
    layout.x_registers.resize(n_bits);
    for (auto &reg : layout.x_registers) {
        for (unsigned j = 0; j < n_bits; ++j) {
            reg.push_back(next++);
        }
    }
    for (unsigned i = 0; i < n_bits; ++i) {
        layout.y.push_back(next++);
    }
    return layout;
}

UnmultCircuit build_unmultiplier(unsigned n_bits, std::uint64_t product) {
    UnmultLayout layout = make_layout(n_bits);
    const unsigned width = 2 * n_bits;
    if ((product >> width) != 0) {
        throw std::out_of_range("unmultiplier: product " + std::to_string(product) + " does not fit in " +
                                std::to_string(width) + " bits");
    }
    qsim::Circuit c(layout.total_wires());

    // Leading zeros stay |0>; p_0 is the MSB.
    for (unsigned j = 0; j < width; ++j) {
        if ((product >> (width - 1 - j)) & 1u) {
            c.append(qsim::x(layout.product[j]));
        }
    }

    for (unsigned i = 0; i < n_bits; ++i) {
        const Wire y_bit = layout.y[i];
        c.append(qsim::x(y_bit));

        unadd::RcuWires rcu{layout.carry_wire(i),
                            {layout.product.begin() + i + 1, layout.product.begin() + i + 1 + n_bits},
                            layout.x_registers[i]};
        unadd::append_rcu(c, rcu);

        // An all-zero a-output means this RCU contributed nothing: y_i = 0.
        std::vector<qsim::Control> all_zero;
        for (Wire w : layout.x_registers[i]) {
            all_zero.push_back(qsim::neg(w));
        }
        c.append(qsim::mcx(std::move(all_zero), y_bit));
    }

    for (unsigned i = 0; i < n_bits; ++i) {
        c.add_register({"c_in_x" + std::to_string(i + 1), {layout.carry_wire(i)}});
    }
    for (unsigned i = 0; i < n_bits; ++i) {
        c.add_register({"x" + std::to_string(i + 1), layout.x_registers[i]});
    }
    c.add_register({"y", layout.y});
    c.add_register({"const0", layout.const0_wires()});
    return {std::move(c), std::move(layout)};
}

RawOutcome decode(qsim::BasisIndex index, const UnmultLayout &layout) {
    RawOutcome out;
    for (unsigned i = 0; i < layout.n_bits; ++i) {
        out.c_in.push_back(static_cast<std::uint32_t>((index >> layout.carry_wire(i)) & 1u));
        out.x.push_back(qsim::read_register(index, {"", layout.x_registers[i]}));
    }
    out.y = qsim::read_register(index, {"", layout.y});
    out.const0 = qsim::read_register(index, {"", layout.const0_wires()});
    return out;
}

std::string_view rejection_name(Rejection r) {
    switch (r) {
    case Rejection::const0_nonzero:
        return "const0";
    case Rejection::carry_nonzero:
        return "c_in";
    case Rejection::x_inconsistent:
        return "x_consistency";
    }
    return "unknown";
}

PostprocessResult postprocess(const RawOutcome &outcome) {
    if (outcome.const0 != 0) {
        return Rejection::const0_nonzero;
    }
    if (std::any_of(outcome.c_in.begin(), outcome.c_in.end(), [](std::uint32_t c) { return c != 0; })) {
        return Rejection::carry_nonzero;
    }
    std::uint64_t x = 0;
    for (std::uint64_t xi : outcome.x) {
        if (xi == 0) {
            continue;
        }
        if (x != 0 && xi != x) {
            return Rejection::x_inconsistent;
        }
        x = xi;
    }
    return FactorPair{x, outcome.y};
}

std::vector<FactorPair> UnmultResult::factor_pairs() const {
    std::vector<FactorPair> out;
    out.reserve(pairs.size());
    for (const auto &p : pairs) {
        out.push_back(p.pair);
    }
    return out;
}

UnmultResult unmultiply(std::uint64_t product, unsigned n_bits, const RunOptions &options) {
    const UnmultCircuit built = build_unmultiplier(n_bits, product);
    const qsim::QuantumState state = qsim::run(built.circuit, options.backend);

    UnmultResult result;
    std::map<FactorPair, WeightedPair> accepted;
    auto tally = [&](qsim::BasisIndex index, double probability, std::uint64_t count) {
        const PostprocessResult verdict = postprocess(decode(index, built.layout));
        if (const auto *pair = std::get_if<FactorPair>(&verdict)) {
            auto &slot = accepted[*pair];
            slot.pair = *pair;
            slot.probability += probability;
            slot.count += count;
        } else {
            const auto kind = static_cast<std::size_t>(std::get<Rejection>(verdict));
            result.rejected_probability[kind] += probability;
            result.rejected_count[kind] += count;
        }
    };

    if (const auto *sampling = std::get_if<SampleMode>(&options.mode)) {
        result.sampled = true;
        result.shots = sampling->shots;
        const auto counts = qsim::sample_basis(state, sampling->shots, sampling->seed, options.threads);
        result.outcomes_examined = counts.size();
        for (const auto &[index, n] : counts) {
            tally(index, static_cast<double>(n) / static_cast<double>(sampling->shots), n);
        }
    } else {
        const auto entries = state.support(kSupportTolerance);
        result.outcomes_examined = entries.size();
        for (const auto &e : entries) {
            tally(e.index, std::norm(e.amplitude), 0);
        }
    }

    for (const auto &[_, w] : accepted) {
        result.pairs.push_back(w);
        result.post_selection_probability += w.probability;
    }
    return result;
}

} // namespace unop::unmult
