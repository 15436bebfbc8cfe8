#include "z2coh/integer_matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "z2coh/errors.hpp"

namespace z2coh {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows)
    {
        if (row.size() != cols_)
            throw DimensionMismatch("ragged initializer for IntegerMatrix");
        for (long long x : row)
            data_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<Integer>& entries)
{
    IntegerMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

IntegerMatrix IntegerMatrix::column_vector(const std::vector<Integer>& entries)
{
    IntegerMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, 0) = entries[i];
    return m;
}

bool IntegerMatrix::is_zero() const
{
    for (const auto& x : data_)
    {
        if (x != 0)
            return false;
    }
    return true;
}

IntegerMatrix IntegerMatrix::transpose() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    }
    return t;
}

std::vector<Integer> IntegerMatrix::column(std::size_t j) const
{
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

std::vector<Integer> IntegerMatrix::row(std::size_t i) const
{
    return std::vector<Integer>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void IntegerMatrix::set_column(std::size_t j, const std::vector<Integer>& values)
{
    if (values.size() != rows_)
        throw DimensionMismatch("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = values[i];
}

IntegerMatrix IntegerMatrix::column_range(std::size_t first, std::size_t last) const
{
    IntegerMatrix m(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
    {
        for (std::size_t j = first; j < last; ++j)
            m(i, j - first) = (*this)(i, j);
    }
    return m;
}

IntegerMatrix IntegerMatrix::row_range(std::size_t first, std::size_t last) const
{
    IntegerMatrix m(last - first, cols_);
    for (std::size_t i = first; i < last; ++i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            m(i - first, j) = (*this)(i, j);
    }
    return m;
}

IntegerMatrix IntegerMatrix::select_rows(const std::vector<std::size_t>& indices) const
{
    IntegerMatrix m(indices.size(), cols_);
    for (std::size_t k = 0; k < indices.size(); ++k)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            m(k, j) = (*this)(indices[k], j);
    }
    return m;
}

IntegerMatrix IntegerMatrix::select_columns(const std::vector<std::size_t>& indices) const
{
    IntegerMatrix m(rows_, indices.size());
    for (std::size_t i = 0; i < rows_; ++i)
    {
        for (std::size_t k = 0; k < indices.size(); ++k)
            m(i, k) = (*this)(i, indices[k]);
    }
    return m;
}

IntegerMatrix IntegerMatrix::hstack(const IntegerMatrix& other) const
{
    if (rows_ != other.rows_)
        throw DimensionMismatch("hstack: row counts differ");
    IntegerMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j)
            m(i, cols_ + j) = other(i, j);
    }
    return m;
}

IntegerMatrix IntegerMatrix::vstack(const IntegerMatrix& other) const
{
    if (cols_ != other.cols_)
        throw DimensionMismatch("vstack: column counts differ");
    IntegerMatrix m(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(i, j);
    }
    for (std::size_t i = 0; i < other.rows_; ++i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            m(rows_ + i, j) = other(i, j);
    }
    return m;
}

std::vector<Integer> IntegerMatrix::apply(const std::vector<Integer>& x) const
{
    if (x.size() != cols_)
        throw DimensionMismatch("apply: vector length mismatch");
    std::vector<Integer> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
    {
        Integer acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
        {
            const Integer& a = (*this)(i, j);
            if (a != 0 && x[j] != 0)
                acc += a * x[j];
        }
        y[i] = std::move(acc);
    }
    return y;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
    {
        const Integer& s = (*this)(source, j);
        if (s != 0)
            (*this)(target, j) += factor * s;
    }
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
    {
        const Integer& s = (*this)(i, source);
        if (s != 0)
            (*this)(i, target) += factor * s;
    }
}

void IntegerMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = -(*this)(i, j);
}

Integer IntegerMatrix::determinant() const
{
    if (!is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntegerMatrix a = *this;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (a(k, k) == 0)
        {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
        {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntegerMatrix::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product: inner dimensions differ");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
    {
        for (std::size_t k = 0; k < a.cols_; ++k)
        {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
            {
                const Integer& bkj = b(k, j);
                if (bkj != 0)
                    c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix sum: shapes differ");
    IntegerMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        c.data_[k] += b.data_[k];
    return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix difference: shapes differ");
    IntegerMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        c.data_[k] -= b.data_[k];
    return c;
}

IntegerMatrix operator*(const Integer& s, const IntegerMatrix& a)
{
    IntegerMatrix c = a;
    for (auto& x : c.data_)
        x *= s;
    return c;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m)
{
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j == 0 ? "" : ", ") << m(i, j);
        os << "]";
        if (i + 1 < m.rows())
            os << "\n";
    }
    os << "]";
    return os;
}

Integer reduce_mod(const Integer& x, const Integer& m)
{
    if (m == 0)
        return x;
    Integer mm = m < 0 ? Integer(-m) : m;
    Integer r = x % mm;
    if (r < 0)
        r += mm;
    return r;
}

}   // namespace z2coh
