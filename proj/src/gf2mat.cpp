#include "ascurve/gf2mat.hpp"

namespace ascurve {

std::vector<std::size_t> BitMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t sel = rank;
        while (sel < rows_ && !get(sel, col)) ++sel;
        if (sel == rows_) continue;
        swap_rows(rank, sel);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != rank && get(r, col)) xor_row(r, rank);
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

std::size_t BitMat::rank() const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        if (!row_is_zero(r)) ++n;
    return n;
}

std::vector<std::vector<std::uint64_t>> BitMat::nullspace_basis() const {
    BitMat m = *this;
    auto pivots = m.rref();
    std::vector<int> pivot_row_of_col(cols_, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row_of_col[pivots[i]] = int(i);
    std::vector<std::vector<std::uint64_t>> basis;
    std::size_t words = (cols_ + 63) / 64;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (pivot_row_of_col[free_col] >= 0) continue;
        std::vector<std::uint64_t> v(words, 0);
        v[free_col / 64] |= std::uint64_t(1) << (free_col % 64);
        for (std::size_t col = 0; col < cols_; ++col) {
            int pr = pivot_row_of_col[col];
            if (pr >= 0 && m.get(std::size_t(pr), free_col))
                v[col / 64] ^= std::uint64_t(1) << (col % 64);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ascurve
