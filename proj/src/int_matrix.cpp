#include "glatt/int_matrix.hpp"

#include "glatt/errors.hpp"

#include <sstream>
#include <utility>

namespace glatt {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw ValidationError("IntMatrix: entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ValidationError("IntMatrix: ragged initializer");
        for (long long v : r)
            entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("IntMatrix: product shape mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Int& b = rhs(k, j);
                if (b != 0)
                    p(i, j) += a * b;
            }
        }
    }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("IntMatrix: sum shape mismatch");
    IntMatrix s = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        s.entries_[i] += rhs.entries_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("IntMatrix: difference shape mismatch");
    IntMatrix s = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        s.entries_[i] -= rhs.entries_[i];
    return s;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix s = *this;
    for (auto& e : s.entries_)
        e = -e;
    return s;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_)
        throw ValidationError("IntMatrix: vector length mismatch");
    std::vector<Int> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                y[i] += (*this)(i, j) * x[j];
    return y;
}

std::strong_ordering IntMatrix::operator<=>(const IntMatrix& rhs) const {
    if (auto c = rows_ <=> rhs.rows_; c != 0)
        return c;
    if (auto c = cols_ <=> rhs.cols_; c != 0)
        return c;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < rhs.entries_[i])
            return std::strong_ordering::less;
        if (entries_[i] > rhs.entries_[i])
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0)
            return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

bool IntMatrix::is_permutation_matrix() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Int& e = (*this)(i, j);
            if (e == 1)
                ++ones;
            else if (e != 0)
                return false;
        }
        if (ones != 1)
            return false;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, j) == 1)
                ++ones;
        if (ones != 1)
            return false;
    }
    return true;
}

Int IntMatrix::det() const {
    if (!is_square())
        throw ValidationError("IntMatrix: determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev; // exact by Bareiss
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

IntMatrix IntMatrix::column(std::size_t j) const {
    IntMatrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        c(i, 0) = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::submatrix_rows(std::size_t first, std::size_t count) const {
    IntMatrix s(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            s(i, j) = (*this)(first + i, j);
    return s;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_)
        throw ValidationError("IntMatrix: hstack row mismatch");
    IntMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j)
            m(i, a.cols_ + j) = b(i, j);
    }
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_)
        throw ValidationError("IntMatrix: vstack column mismatch");
    IntMatrix m(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            m(a.rows_ + i, j) = b(i, j);
    return m;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::sub_row_multiple(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) -= q * (*this)(j, c);
}

void IntMatrix::sub_col_multiple(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, i) -= q * (*this)(r, j);
}

void IntMatrix::add_row(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) += (*this)(j, c);
}

std::string IntMatrix::to_string() const {
    if (rows_ == 0 || cols_ == 0)
        return "[]";
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i)
            out << ',';
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out << ',';
            out << (*this)(i, j);
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

bool is_unimodular(const IntMatrix& m) {
    if (!m.is_square())
        return false;
    Int d = m.det();
    return d == 1 || d == -1;
}

} // namespace glatt
