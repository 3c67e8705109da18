#include "lozenge/matrix.hpp"

#include <stdexcept>

namespace lozenge {

Rational ExactMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return Rational(1);

    std::vector<Rational> a = entries_;
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && at(pivot, k) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(at(pivot, j), at(k, j));
            det = -det;
        }
        det *= at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (at(i, k) == 0) continue;
            const Rational factor = at(i, k) / at(k, k);
            for (std::size_t j = k; j < n; ++j) at(i, j) -= factor * at(k, j);
        }
    }
    return det;
}

ExactMatrix submatrix(const ExactMatrix& m, std::span<const int> row_idx,
                      std::span<const int> col_idx) {
    ExactMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            out.at(i, j) = m.at(static_cast<std::size_t>(row_idx[i]),
                                static_cast<std::size_t>(col_idx[j]));
        }
    }
    return out;
}

}  // namespace lozenge
