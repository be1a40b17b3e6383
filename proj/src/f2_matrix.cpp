#include "borelss/f2_matrix.hpp"

#include <algorithm>
#include <utility>

#include "borelss/errors.hpp"

namespace borelss {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(rows * ((cols + 63) / 64), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InvalidInput("F2Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] != '0' && rows[r][c] != '1')
                throw InvalidInput("F2Matrix::from_rows: entries must be 0 or 1");
            m.set(r, c, rows[r][c] == '1');
        }
    }
    return m;
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("F2Matrix::get");
    return (row_ptr(r)[c / 64] >> (c % 64)) & 1U;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("F2Matrix::set");
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (value)
        row_ptr(r)[c / 64] |= bit;
    else
        row_ptr(r)[c / 64] &= ~bit;
}

void F2Matrix::flip(std::size_t r, std::size_t c) {
    set(r, c, !get(r, c));
}

bool F2Matrix::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

F2Matrix operator*(const F2Matrix& lhs, const F2Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_)
        throw PreconditionViolation("F2Matrix product: inner dimensions differ");
    F2Matrix out(lhs.rows_, rhs.cols_);
    const std::size_t w = rhs.words_per_row();
    for (std::size_t r = 0; r < lhs.rows_; ++r) {
        std::uint64_t* dst = out.row_ptr(r);
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            if (!lhs.get(r, k))
                continue;
            const std::uint64_t* src = rhs.row_ptr(k);
            for (std::size_t i = 0; i < w; ++i)
                dst[i] ^= src[i];
        }
    }
    return out;
}

std::size_t rank(F2Matrix m) {
    const std::size_t w = m.words_per_row();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols_ && pivot_row < m.rows_; ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows_ && !m.get(r, c))
            ++r;
        if (r == m.rows_)
            continue;
        if (r != pivot_row)
            std::swap_ranges(m.row_ptr(r), m.row_ptr(r) + w, m.row_ptr(pivot_row));
        for (std::size_t other = 0; other < m.rows_; ++other) {
            if (other == pivot_row || !m.get(other, c))
                continue;
            std::uint64_t* dst = m.row_ptr(other);
            const std::uint64_t* src = m.row_ptr(pivot_row);
            for (std::size_t i = 0; i < w; ++i)
                dst[i] ^= src[i];
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t homology_dim(const F2Matrix& d_in, const F2Matrix& d_out) {
    if (d_in.row_count() != d_out.col_count())
        throw PreconditionViolation("homology_dim: d_in and d_out do not compose");
    if (!(d_out * d_in).is_zero())
        throw PreconditionViolation("homology_dim: d_out * d_in is not zero");
    const std::size_t middle = d_out.col_count();
    return middle - rank(d_out) - rank(d_in);
}

}  // namespace borelss
