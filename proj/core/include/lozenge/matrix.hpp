#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lozenge/exact.hpp"

namespace lozenge {

/// Dense matrix of exact rationals; determinant via exact Gaussian
/// elimination. Only defined for square matrices.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    /// Signed determinant; det of the 0x0 matrix is 1.
    Rational determinant() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Minor of m given by the selected row and column indices (in order).
ExactMatrix submatrix(const ExactMatrix& m, std::span<const int> row_idx,
                      std::span<const int> col_idx);

}  // namespace lozenge
