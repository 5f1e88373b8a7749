#pragma once

#include <cstddef>
#include <vector>

namespace niep {

/// Small dense real matrix, row-major.
struct DenseMatrix {
    int n = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    explicit DenseMatrix(int dim) : n(dim), data(static_cast<std::size_t>(dim) * dim, 0.0) {}

    [[nodiscard]] double& at(int i, int j) {
        return data[static_cast<std::size_t>(i) * n + j];
    }
    [[nodiscard]] double at(int i, int j) const {
        return data[static_cast<std::size_t>(i) * n + j];
    }

    [[nodiscard]] static DenseMatrix identity(int dim);
    [[nodiscard]] DenseMatrix operator*(const DenseMatrix& other) const;
    [[nodiscard]] double trace() const;
};

/// Companion-plus-diagonal matrix: prescribed diagonal (a_1, ..., a_n), unit
/// superdiagonal, and a free bottom row reading (b_n, b_{n-1}, ..., b_2, a_n)
/// left to right. Zero everywhere else. The b entries are stored as
/// (b_2, ..., b_n) and may be negative; nonnegativity is audited separately.
class CompanionDiagonalMatrix {
public:
    CompanionDiagonalMatrix(std::vector<double> diag, std::vector<double> b);

    [[nodiscard]] int n() const { return static_cast<int>(diag_.size()); }
    [[nodiscard]] const std::vector<double>& diag() const { return diag_; }
    [[nodiscard]] const std::vector<double>& b() const { return b_; }

    /// b_j by its subscript, j in 2..n.
    [[nodiscard]] double b_entry(int j) const;

    [[nodiscard]] DenseMatrix dense() const;

private:
    std::vector<double> diag_;
    std::vector<double> b_;
};

}  // namespace niep
