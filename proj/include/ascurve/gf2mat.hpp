#pragma once

#include <cstdint>
#include <vector>

namespace ascurve {

// Dense GF(2) matrix with bit-packed rows; sized for the linear algebra in
// this project (a few hundred rows/columns).
class BitMat {
public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        if (v)
            data_[r * words_ + c / 64] |= std::uint64_t(1) << (c % 64);
        else
            data_[r * words_ + c / 64] &= ~(std::uint64_t(1) << (c % 64));
    }
    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < words_; ++k) data_[dst * words_ + k] ^= data_[src * words_ + k];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t k = 0; k < words_; ++k)
            std::swap(data_[a * words_ + k], data_[b * words_ + k]);
    }
    bool row_is_zero(std::size_t r) const {
        for (std::size_t k = 0; k < words_; ++k)
            if (data_[r * words_ + k]) return false;
        return true;
    }

    // In-place reduced row echelon form; returns the pivot column of each of
    // the first rank() rows.
    std::vector<std::size_t> rref();
    std::size_t rank() const;  // requires rref() done, counts nonzero rows

    // Basis of {x : Ax = 0}; the basis vectors are deterministic: one per
    // free column in ascending column order.
    std::vector<std::vector<std::uint64_t>> nullspace_basis() const;

    static bool vec_get(const std::vector<std::uint64_t>& v, std::size_t c) {
        return (v[c / 64] >> (c % 64)) & 1;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace ascurve
