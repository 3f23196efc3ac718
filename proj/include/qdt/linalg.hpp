#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace qdt {

/// Dense matrix over Q with exact reduced row echelon form.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return cols_; }

    mpq_class& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return a_[r][c]; }

    void append_row(std::vector<mpq_class> row);

    /// In-place reduced row echelon form; returns the pivot columns in
    /// increasing order. Zero rows are removed.
    std::vector<std::size_t> rref();

    /// Rank without modifying this matrix.
    std::size_t rank() const;

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<mpq_class>> a_;
};

}  // namespace qdt
