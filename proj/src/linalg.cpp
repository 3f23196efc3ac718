#include "qdt/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qdt {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), a_(rows, std::vector<mpq_class>(cols, mpq_class(0))) {}

void RationalMatrix::append_row(std::vector<mpq_class> row) {
    if (a_.empty() && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: row length mismatch");
    a_.push_back(std::move(row));
}

std::vector<std::size_t> RationalMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    mpq_class f;
    for (std::size_t c = 0; c < cols_ && r < a_.size(); ++c) {
        std::size_t p = r;
        while (p < a_.size() && a_[p][c] == 0) ++p;
        if (p == a_.size()) continue;
        std::swap(a_[r], a_[p]);
        const mpq_class inv = 1 / a_[r][c];
        for (std::size_t j = c; j < cols_; ++j)
            if (a_[r][j] != 0) a_[r][j] *= inv;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i == r || a_[i][c] == 0) continue;
            f = a_[i][c];
            for (std::size_t j = c; j < cols_; ++j)
                if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a_.resize(r);
    return pivots;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix copy = *this;
    return copy.rref().size();
}

}  // namespace qdt
