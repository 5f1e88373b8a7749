#include "niep/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "niep/errors.hpp"

namespace niep {

DenseMatrix DenseMatrix::identity(int dim) {
    DenseMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
    if (n != other.n) {
        throw DimensionMismatch("matrix product: dimensions differ");
    }
    DenseMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double aik = at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                out.at(i, j) += aik * other.at(k, j);
            }
        }
    }
    return out;
}

double DenseMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
}

CompanionDiagonalMatrix::CompanionDiagonalMatrix(std::vector<double> diag,
                                                 std::vector<double> b)
    : diag_(std::move(diag)), b_(std::move(b)) {
    if (diag_.empty()) {
        throw DimensionMismatch("companion-diagonal matrix: empty diagonal");
    }
    if (b_.size() + 1 != diag_.size()) {
        throw DimensionMismatch(
            "companion-diagonal matrix: need exactly n-1 bottom-row entries");
    }
    for (double v : diag_) {
        if (!std::isfinite(v)) {
            throw InvalidInput("companion-diagonal matrix: non-finite entry");
        }
    }
    for (double v : b_) {
        if (!std::isfinite(v)) {
            throw InvalidInput("companion-diagonal matrix: non-finite entry");
        }
    }
}

double CompanionDiagonalMatrix::b_entry(int j) const {
    if (j < 2 || j > n()) {
        throw std::out_of_range("b_entry: subscript outside 2..n");
    }
    return b_[static_cast<std::size_t>(j) - 2];
}

DenseMatrix CompanionDiagonalMatrix::dense() const {
    const int dim = n();
    DenseMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = diag_[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < dim; ++i) m.at(i, i + 1) = 1.0;
    // Bottom row: column j (0-based) holds b_{n-j} for j < n-1.
    for (int j = 0; j + 1 < dim; ++j) {
        m.at(dim - 1, j) = b_[static_cast<std::size_t>(dim - j) - 2];
    }
    return m;
}

}  // namespace niep
