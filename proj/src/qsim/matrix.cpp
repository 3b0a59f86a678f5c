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

#include "unop/qsim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unop::qsim {

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::initializer_list<Amplitude> row_major) : dim_(dim), data_(row_major) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("Matrix: expected " + std::to_string(dim * dim) + " entries, got " +
                                    std::to_string(data_.size()));
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("Matrix::max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

double Matrix::unitarity_deviation() const { return (adjoint() * (*this)).max_abs_diff(identity(dim_)); }

Matrix operator*(const Matrix &lhs, const Matrix &rhs) {
    if (lhs.dim_ != rhs.dim_) {
        throw std::invalid_argument("Matrix product: dimension mismatch");
    }
    const std::size_t n = lhs.dim_;
    Matrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Amplitude v = lhs(r, k);
            if (v == Amplitude{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += v * rhs(k, c);
            }
        }
    }
    return out;
}

} // namespace unop::qsim
