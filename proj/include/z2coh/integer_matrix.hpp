/**
 * Exact dense integer matrices over arbitrary-precision integers.
 *
 * Every boundary map, differential and change of basis in the library is an
 * IntegerMatrix. Entries are boost::multiprecision::cpp_int, so elimination
 * never overflows.
 */

#ifndef Z2COH_INTEGER_MATRIX_HPP
#define Z2COH_INTEGER_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace z2coh {

using Integer = boost::multiprecision::cpp_int;

class IntegerMatrix
{
    public:
        IntegerMatrix() = default;
        IntegerMatrix(std::size_t rows, std::size_t cols);
        IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

        static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return IntegerMatrix(rows, cols); }
        static IntegerMatrix identity(std::size_t n);
        static IntegerMatrix diagonal(const std::vector<Integer>& entries);
        static IntegerMatrix column_vector(const std::vector<Integer>& entries);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        bool empty() const { return rows_ == 0 || cols_ == 0; }

        Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
        const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

        bool is_zero() const;
        bool is_square() const { return rows_ == cols_; }

        IntegerMatrix transpose() const;
        std::vector<Integer> column(std::size_t j) const;
        std::vector<Integer> row(std::size_t i) const;
        void set_column(std::size_t j, const std::vector<Integer>& values);

        /// Columns [first, last) as a new matrix.
        IntegerMatrix column_range(std::size_t first, std::size_t last) const;
        /// Rows [first, last) as a new matrix.
        IntegerMatrix row_range(std::size_t first, std::size_t last) const;
        IntegerMatrix select_rows(const std::vector<std::size_t>& indices) const;
        IntegerMatrix select_columns(const std::vector<std::size_t>& indices) const;

        /// [this | other]; both must have the same number of rows.
        IntegerMatrix hstack(const IntegerMatrix& other) const;
        /// [this ; other]; both must have the same number of columns.
        IntegerMatrix vstack(const IntegerMatrix& other) const;

        std::vector<Integer> apply(const std::vector<Integer>& x) const;

        // Elementary operations, used by the Smith normal form.
        void swap_rows(std::size_t a, std::size_t b);
        void swap_cols(std::size_t a, std::size_t b);
        /// row[target] += factor * row[source]
        void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
        /// col[target] += factor * col[source]
        void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
        void negate_row(std::size_t i);
        void negate_col(std::size_t j);

        /// Determinant by fraction-free (Bareiss) elimination; square matrices only.
        Integer determinant() const;

        std::string to_string() const;

        friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
        friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
        friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
        friend IntegerMatrix operator*(const Integer& s, const IntegerMatrix& a);
        friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// Representative of x modulo m in [0, |m|); returns x unchanged when m == 0.
Integer reduce_mod(const Integer& x, const Integer& m);

}   // namespace z2coh

#endif
