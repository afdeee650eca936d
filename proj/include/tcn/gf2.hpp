#ifndef TCN_GF2_HPP
#define TCN_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tcn {

/// Bit vector of length <= 64; bit j is coordinate j.
using BitVec = std::uint64_t;

/// Dense matrix over F_2 with at most 64 rows and columns. Each row is one
/// machine word, so elimination is word-parallel.
class MatrixF2 {
public:
    static constexpr std::size_t kMaxDim = 64;

    MatrixF2() = default;
    MatrixF2(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, 0) {
        if (rows > kMaxDim || cols > kMaxDim) throw std::invalid_argument("MatrixF2: dimension exceeds 64");
    }

    static MatrixF2 identity(std::size_t n) {
        MatrixF2 m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    /// Row-major construction from per-row bit patterns (bit j = column j).
    static MatrixF2 from_rows(std::size_t cols, const std::vector<BitVec>& rows) {
        MatrixF2 m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) m.data_[i] = rows[i] & m.col_mask();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        check(i, j);
        return (data_[i] >> j) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        check(i, j);
        if (v)
            data_[i] |= BitVec{1} << j;
        else
            data_[i] &= ~(BitVec{1} << j);
    }
    void flip(std::size_t i, std::size_t j) {
        check(i, j);
        data_[i] ^= BitVec{1} << j;
    }

    BitVec row(std::size_t i) const { return data_.at(i); }

    /// Matrix-vector product over F_2.
    BitVec apply(BitVec x) const {
        BitVec out = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (std::popcount(data_[i] & x) & 1) out |= BitVec{1} << i;
        }
        return out;
    }

    friend bool operator==(const MatrixF2&, const MatrixF2&) = default;

private:
    BitVec col_mask() const { return cols_ == 64 ? ~BitVec{0} : ((BitVec{1} << cols_) - 1); }
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("MatrixF2: index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

namespace detail {

// Reduced row echelon form in place; returns pivot columns in row order.
inline std::vector<std::size_t> rref(std::vector<BitVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        const BitVec bit = BitVec{1} << c;
        std::size_t sel = r;
        while (sel < rows.size() && !(rows[sel] & bit)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank_f2(const MatrixF2& m) {
    std::vector<BitVec> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
    return detail::rref(rows, m.cols()).size();
}

/// Basis of the right kernel {x : m x = 0}; size is cols - rank.
inline std::vector<BitVec> kernel_basis_f2(const MatrixF2& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("kernel_basis_f2: matrix is not square");
    std::vector<BitVec> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
    const auto pivots = detail::rref(rows, m.cols());

    BitVec pivot_mask = 0;
    for (std::size_t c : pivots) pivot_mask |= BitVec{1} << c;

    std::vector<BitVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (pivot_mask >> free & 1U) continue;
        BitVec x = BitVec{1} << free;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            if (rows[k] >> free & 1U) x |= BitVec{1} << pivots[k];
        }
        basis.push_back(x);
    }
    return basis;
}

inline MatrixF2 transpose(const MatrixF2& m) {
    MatrixF2 t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) t.set(j, i, true);
    return t;
}

}  // namespace tcn

#endif
