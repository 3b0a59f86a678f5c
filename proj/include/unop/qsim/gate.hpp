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

#include "unop/qsim/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace unop::qsim {

using Wire = std::uint32_t;

/// Positive controls fire on |1>, negative controls on |0>.
enum class Polarity : std::uint8_t { positive, negative };

struct Control {
    Wire wire;
    Polarity polarity = Polarity::positive;

    friend bool operator==(const Control &, const Control &) = default;
};

inline constexpr double kUnitarityTolerance = 1e-12;

/**
 * A unitary acting on an ordered list of target wires, optionally conditioned
 * on control wires.
 *
 * Targets are listed most-significant first: for targets (t0, t1, ..., tk-1)
 * the matrix row/column index is sum_j bit(tj) << (k-1-j). The matrix is
 * applied only to amplitude blocks in which every control matches its
 * polarity.
 *
 * Construction throws std::invalid_argument when the matrix is not unitary
 * within kUnitarityTolerance, its dimension is not 2^k, or any wire repeats.
 */
class Gate {
  public:
    Gate(std::string name, Matrix matrix, std::vector<Wire> targets, std::vector<Control> controls = {});

    const std::string &name() const { return name_; }
    const Matrix &matrix() const { return matrix_; }
    const std::vector<Wire> &targets() const { return targets_; }
    const std::vector<Control> &controls() const { return controls_; }

    /// Largest wire index referenced by targets or controls.
    Wire max_wire() const;

    /// Copy of this gate with additional controls appended.
    Gate controlled_by(const std::vector<Control> &extra) const;

  private:
    std::string name_;
    Matrix matrix_;
    std::vector<Wire> targets_;
    std::vector<Control> controls_;
};

Matrix pauli_x_matrix();
Matrix hadamard_matrix();
/// [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]
Matrix ry_matrix(double theta);

Gate x(Wire target, std::vector<Control> controls = {});
Gate h(Wire target, std::vector<Control> controls = {});
Gate ry(double theta, Wire target, std::vector<Control> controls = {});
/// X on target when every control matches its polarity.
Gate mcx(std::vector<Control> controls, Wire target);

inline Control pos(Wire w) { return {w, Polarity::positive}; }
inline Control neg(Wire w) { return {w, Polarity::negative}; }

} // namespace unop::qsim
