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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace unop::qsim {

using Amplitude = std::complex<double>;

/// Dense square complex matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t dim);
    Matrix(std::size_t dim, std::initializer_list<Amplitude> row_major);

    static Matrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Amplitude &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Amplitude &operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    Matrix adjoint() const;

    /// Largest entrywise magnitude of (this - other). Dimensions must agree.
    double max_abs_diff(const Matrix &other) const;

    /// max |M^dagger M - I| over all entries.
    double unitarity_deviation() const;

    friend Matrix operator*(const Matrix &lhs, const Matrix &rhs);

  private:
    std::size_t dim_ = 0;
    std::vector<Amplitude> data_;
};

} // namespace unop::qsim
