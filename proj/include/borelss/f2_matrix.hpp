#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace borelss {

/// Dense matrix over F2, rows packed into 64-bit words.
///
/// Linear maps act on column vectors: a map V -> W is stored with
/// row_count() == dim W and col_count() == dim V.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix identity(std::size_t n);
    /// Rows given as strings of '0'/'1'; all rows must have equal length.
    static F2Matrix from_rows(const std::vector<std::string>& rows);

    std::size_t row_count() const { return rows_; }
    std::size_t col_count() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    bool is_zero() const;
    F2Matrix transpose() const;

    friend F2Matrix operator*(const F2Matrix& lhs, const F2Matrix& rhs);
    friend bool operator==(const F2Matrix& lhs, const F2Matrix& rhs) = default;

  private:
    std::size_t words_per_row() const { return (cols_ + 63) / 64; }
    std::uint64_t* row_ptr(std::size_t r) { return words_.data() + r * words_per_row(); }
    const std::uint64_t* row_ptr(std::size_t r) const { return words_.data() + r * words_per_row(); }

    friend std::size_t rank(F2Matrix m);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Rank over F2 by Gauss-Jordan elimination.
std::size_t rank(F2Matrix m);

/// dim ker(d_out) - rank(d_in) for a composable pair V_in -> V -> V_out.
/// Throws PreconditionViolation if the shapes do not compose or d_out * d_in != 0.
std::size_t homology_dim(const F2Matrix& d_in, const F2Matrix& d_out);

}  // namespace borelss
