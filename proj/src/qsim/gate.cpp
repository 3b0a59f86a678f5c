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

#include "unop/qsim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace unop::qsim {

Gate::Gate(std::string name, Matrix matrix, std::vector<Wire> targets, std::vector<Control> controls)
    : name_(std::move(name)), matrix_(std::move(matrix)), targets_(std::move(targets)), controls_(std::move(controls)) {
    if (targets_.empty()) {
        throw std::invalid_argument("Gate " + name_ + ": no target wires");
    }
    if (targets_.size() >= 16 || matrix_.dim() != (std::size_t{1} << targets_.size())) {
        throw std::invalid_argument("Gate " + name_ + ": matrix dimension " + std::to_string(matrix_.dim()) +
                                    " does not match " + std::to_string(targets_.size()) + " target(s)");
    }
    std::unordered_set<Wire> seen;
    for (Wire w : targets_) {
        if (!seen.insert(w).second) {
            throw std::invalid_argument("Gate " + name_ + ": wire " + std::to_string(w) + " repeated");
        }
    }
    for (const Control &c : controls_) {
        if (!seen.insert(c.wire).second) {
            throw std::invalid_argument("Gate " + name_ + ": wire " + std::to_string(c.wire) + " repeated");
        }
    }
    const double dev = matrix_.unitarity_deviation();
    if (!(dev < kUnitarityTolerance)) {
        throw std::invalid_argument("Gate " + name_ + ": matrix not unitary (max |U^dagger U - I| = " +
                                    std::to_string(dev) + ")");
    }
}

Wire Gate::max_wire() const {
    Wire m = *std::max_element(targets_.begin(), targets_.end());
    for (const Control &c : controls_) {
        m = std::max(m, c.wire);
    }
    return m;
}

Gate Gate::controlled_by(const std::vector<Control> &extra) const {
    std::vector<Control> all = controls_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Gate(name_, matrix_, targets_, std::move(all));
}

Matrix pauli_x_matrix() { return Matrix(2, {0.0, 1.0, 1.0, 0.0}); }

Matrix hadamard_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    return Matrix(2, {s, s, s, -s});
}

Matrix ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return Matrix(2, {c, -s, s, c});
}

Gate x(Wire target, std::vector<Control> controls) { return Gate("x", pauli_x_matrix(), {target}, std::move(controls)); }

Gate h(Wire target, std::vector<Control> controls) { return Gate("h", hadamard_matrix(), {target}, std::move(controls)); }

Gate ry(double theta, Wire target, std::vector<Control> controls) {
    return Gate("ry", ry_matrix(theta), {target}, std::move(controls));
}

Gate mcx(std::vector<Control> controls, Wire target) { return Gate("mcx", pauli_x_matrix(), {target}, std::move(controls)); }

} // namespace unop::qsim
