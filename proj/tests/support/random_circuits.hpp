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

// Random unitaries and circuits for property tests.

#include "unop/qsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace unop::test_support {

/// Gram-Schmidt on a random complex matrix.
inline qsim::Matrix random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<std::vector<qsim::Amplitude>> cols(dim, std::vector<qsim::Amplitude>(dim));
    for (auto &col : cols) {
        for (auto &v : col) {
            v = {normal(rng), normal(rng)};
        }
    }
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t p = 0; p < c; ++p) {
            qsim::Amplitude dot{};
            for (std::size_t r = 0; r < dim; ++r) {
                dot += std::conj(cols[p][r]) * cols[c][r];
            }
            for (std::size_t r = 0; r < dim; ++r) {
                cols[c][r] -= dot * cols[p][r];
            }
        }
        double norm = 0.0;
        for (const auto &v : cols[c]) {
            norm += std::norm(v);
        }
        norm = std::sqrt(norm);
        for (auto &v : cols[c]) {
            v /= norm;
        }
    }
    qsim::Matrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = cols[c][r];
        }
    }
    return m;
}

inline std::vector<qsim::Wire> pick_wires(std::size_t num_wires, std::size_t count, std::mt19937_64 &rng) {
    std::vector<qsim::Wire> all(num_wires);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
}

/// Random gate with 1..max_targets targets and 0..max_controls mixed-polarity controls.
inline qsim::Gate random_gate(std::size_t num_wires, std::size_t max_targets, std::size_t max_controls,
                              std::mt19937_64 &rng, bool permutation_only = false) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(max_targets, num_wires))(rng);
    const std::size_t c =
        std::uniform_int_distribution<std::size_t>(0, std::min(max_controls, num_wires - k))(rng);
    const auto wires = pick_wires(num_wires, k + c, rng);
    std::vector<qsim::Wire> targets(wires.begin(), wires.begin() + k);
    std::vector<qsim::Control> controls;
    for (std::size_t i = k; i < k + c; ++i) {
        controls.push_back({wires[i], (rng() & 1u) ? qsim::Polarity::positive : qsim::Polarity::negative});
    }
    if (permutation_only) {
        return qsim::Gate("x", qsim::pauli_x_matrix(), {targets.front()}, std::move(controls));
    }
    return qsim::Gate("random", random_unitary(std::size_t{1} << k, rng), std::move(targets), std::move(controls));
}

} // namespace unop::test_support
