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

#include "unop/verify.hpp"

#include "unop/oracle.hpp"
#include "unop/qsim/sampling.hpp"
#include "unop/qsim/state.hpp"
#include "unop/unadd.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace unop::verify {

namespace {

using Distribution = std::map<unsigned, double>; // 4*c_in + 2*b + a -> probability

std::string label(unadd::FullUnadderInput in) {
    return "(c_out=" + std::to_string(in.c_out) + ",sum=" + std::to_string(in.sum) + ")";
}

/// Uniform over every full-adder input that produces (sum, c_out).
Distribution expected_distribution(unadd::FullUnadderInput in) {
    Distribution d;
    for (unsigned key = 0; key < 8; ++key) {
        const unsigned c_in = key >> 2, b = (key >> 1) & 1u, a = key & 1u;
        if (oracle::full_adder(a, b, c_in) == oracle::AdderResult{in.sum, in.c_out}) {
            d[key] = 1.0;
        }
    }
    for (auto &[_, p] : d) {
        p /= static_cast<double>(d.size());
    }
    return d;
}

unsigned output_key(qsim::BasisIndex index, const qsim::Circuit &c) {
    return static_cast<unsigned>(4 * qsim::read_register(index, c.register_named("c_in")) +
                                 2 * qsim::read_register(index, c.register_named("b")) +
                                 qsim::read_register(index, c.register_named("a")));
}

Distribution output_distribution(const qsim::Circuit &c, qsim::Backend backend) {
    Distribution d;
    for (const auto &e : qsim::run(c, backend).support(0.0)) {
        d[output_key(e.index, c)] += std::norm(e.amplitude);
    }
    return d;
}

/// Largest probability difference over the union of keys; keys whose expected
/// probability is 1 must match exactly.
std::pair<bool, double> compare(const Distribution &got, const Distribution &want) {
    double worst = 0.0;
    bool exact_ok = true;
    Distribution keys = got;
    keys.insert(want.begin(), want.end());
    for (const auto &[key, _] : keys) {
        const double g = got.contains(key) ? got.at(key) : 0.0;
        const double w = want.contains(key) ? want.at(key) : 0.0;
        worst = std::max(worst, std::abs(g - w));
        if (w == 1.0 && g != 1.0) {
            exact_ok = false;
        }
    }
    return {exact_ok && worst < kProbabilityTolerance, worst};
}

std::string describe(const Distribution &d) {
    std::ostringstream os;
    os.precision(12);
    os << "{";
    bool first = true;
    for (const auto &[key, p] : d) {
        os << (first ? "" : ", ") << (key >> 2) << ((key >> 1) & 1u) << (key & 1u) << ":" << p;
        first = false;
    }
    os << "}";
    return os.str();
}

qsim::Circuit gate_circuit(const qsim::Matrix &m, unadd::FullUnadderInput in) {
    qsim::Circuit c(3);
    c.append(qsim::Gate("full_unadder", m, {0, 1, 2}));
    c.add_register({"c_in", {0}});
    c.add_register({"b", {1}});
    c.add_register({"a", {2}});
    c.set_initial_state(qsim::BasisIndex{in.c_out} | (qsim::BasisIndex{in.sum} << 1));
    return c;
}

constexpr unadd::FullUnadderInput kInputs[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &options) {
    std::vector<CheckResult> checks;

    qsim::Matrix matrix = unadd::full_unadder_matrix();
    if (options.tamper) {
        const auto &t = *options.tamper;
        if (t.row >= 8 || t.col >= 8) {
            throw std::out_of_range("verify: tamper entry must be within the 8x8 matrix");
        }
        matrix(t.row, t.col) += t.delta;
    }

    {
        const double dev = matrix.unitarity_deviation();
        std::ostringstream os;
        os << "max |U^dagger U - I| = " << dev;
        checks.push_back({"gate_unitarity", dev < qsim::kUnitarityTolerance, os.str()});
    }

    for (const auto in : kInputs) {
        const Distribution want = expected_distribution(in);

        Distribution from_gate;
        std::string gate_error;
        try {
            from_gate = output_distribution(gate_circuit(matrix, in), qsim::Backend::dense);
        } catch (const std::invalid_argument &e) {
            gate_error = e.what();
        }
        if (gate_error.empty()) {
            const auto [ok, diff] = compare(from_gate, want);
            checks.push_back({"truth_table_gate " + label(in), ok, describe(from_gate)});
        } else {
            checks.push_back({"truth_table_gate " + label(in), false, gate_error});
        }

        const Distribution from_circuit =
            output_distribution(unadd::build_full_unadder_circuit(in), qsim::Backend::dense);
        const auto [ok, diff] = compare(from_circuit, want);
        checks.push_back({"truth_table_circuit " + label(in), ok, describe(from_circuit)});

        if (gate_error.empty()) {
            const auto [same, gap] = compare(from_circuit, from_gate);
            std::ostringstream os;
            os << "max probability difference " << gap;
            checks.push_back({"realization_equivalence " + label(in), gap < kProbabilityTolerance, os.str()});
        } else {
            checks.push_back({"realization_equivalence " + label(in), false, gate_error});
        }
    }

    {
        double worst = 0.0;
        for (const auto in : kInputs) {
            for (const auto backend : {qsim::Backend::dense, qsim::Backend::sparse}) {
                const qsim::Circuit c = unadd::build_full_unadder_circuit(in);
                auto state = qsim::QuantumState::basis(c.num_wires(), c.initial_state(), backend);
                for (const auto &g : c.gates()) {
                    state.apply(g);
                    worst = std::max(worst, std::abs(state.norm_squared() - 1.0));
                }
            }
        }
        std::ostringstream os;
        os << "max | |psi|^2 - 1 | = " << worst;
        checks.push_back({"norm_preservation", worst < kProbabilityTolerance, os.str()});
    }

    if (options.shots > 0) {
        for (const auto in : kInputs) {
            const Distribution want = expected_distribution(in);
            if (want.size() < 2) {
                continue;
            }
            const std::pair<std::string, qsim::Circuit> realizations[] = {
                {"circuit", unadd::build_full_unadder_circuit(in)},
                {"gate", unadd::build_full_unadder_gate_circuit(in)},
            };
            for (const auto &[name, c] : realizations) {
                const auto state = qsim::run(c, qsim::Backend::dense);
                Distribution freq;
                for (const auto &[index, n] : qsim::sample_basis(state, options.shots, options.seed)) {
                    freq[output_key(index, c)] += static_cast<double>(n) / static_cast<double>(options.shots);
                }
                bool ok = freq.size() == want.size();
                for (const auto &[key, f] : freq) {
                    ok = ok && want.contains(key) && std::abs(f - want.at(key)) <= kFrequencyTolerance;
                }
                checks.push_back({"sampled_frequencies_" + name + " " + label(in), ok, describe(freq)});
            }
        }
    }
    return checks;
}

} // namespace unop::verify
