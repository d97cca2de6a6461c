#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace glatt {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix over Z with arbitrary-precision entries.
/// Shapes with zero rows or zero columns are legal and behave as rank-0
/// objects (det of the 0x0 matrix is 1).
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return entries_; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    std::vector<Int> apply(const std::vector<Int>& x) const;

    bool operator==(const IntMatrix& rhs) const = default;
    /// Lexicographic by (rows, cols, entries); used for deterministic ordering.
    std::strong_ordering operator<=>(const IntMatrix& rhs) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;
    bool is_permutation_matrix() const;

    /// Exact determinant (Bareiss fraction-free elimination).
    Int det() const;

    IntMatrix column(std::size_t j) const;
    IntMatrix submatrix_rows(std::size_t first, std::size_t count) const;

    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
    /// Block-diagonal of two (possibly empty) square matrices.
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    /// row i -= q * row j
    void sub_row_multiple(std::size_t i, std::size_t j, const Int& q);
    /// col i -= q * col j
    void sub_col_multiple(std::size_t i, std::size_t j, const Int& q);
    void add_row(std::size_t i, std::size_t j); // row i += row j

    /// "[[a,b],[c,d]]"; "[]" for empty shapes.
    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

bool is_unimodular(const IntMatrix& m);

} // namespace glatt
