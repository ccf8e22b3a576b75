#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace corank::linalg {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, positive denominator)
/// as long as callers construct through strings, integers, or arithmetic.
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Sparse rational matrix stored by columns. Each column is a list of (row, value) entries sorted
/// by row; zero values are never stored.
class Matrix {
public:
    struct Entry {
        std::size_t row;
        Rational value;
    };
    using Column = std::vector<Entry>;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n);
    static Matrix from_dense(const std::vector<std::vector<Rational>>& rows);
    static Matrix from_dense(std::size_t rows, std::size_t cols, const std::vector<long>& row_major);
    /// Columns given as dense vectors of equal length `rows`.
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    std::size_t nnz() const noexcept;
    bool is_zero() const noexcept { return nnz() == 0; }

    Rational at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, const Rational& value);
    void add_to(std::size_t row, std::size_t col, const Rational& value);

    const Column& column(std::size_t col) const { return columns_[col]; }
    std::vector<Rational> dense_column(std::size_t col) const;
    std::vector<std::vector<Rational>> to_dense() const;

    Matrix transpose() const;
    /// Columns [first, first + count).
    Matrix column_range(std::size_t first, std::size_t count) const;
    Matrix select_columns(const std::vector<std::size_t>& cols) const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;
    /// [this | other]; row counts must agree.
    Matrix hstack(const Matrix& other) const;
    /// [this ; other]; column counts must agree.
    Matrix vstack(const Matrix& other) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& factor) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    std::string debug_string() const;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

}  // namespace corank::linalg
