#pragma once

#include "dw/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dw {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals. Zero-row and zero-column
/// matrices are ordinary values.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    /// Row-wise literal, e.g. `Matrix{{1, 2}, {3, 4}}`. All rows must have equal length.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Matrix whose columns are the given vectors, each of length `rows`.
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const noexcept { return data_; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Matrix a, const Rational& s);
Vector operator*(const Matrix& a, std::span<const Rational> v);

/// [a b] and [a; b].
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Location and values of the first entry (row-major order) where two
/// equal-shape matrices differ; nullopt when they are equal.
struct EntryMismatch {
    std::size_t row = 0;
    std::size_t col = 0;
    Rational lhs;
    Rational rhs;
};
std::optional<EntryMismatch> first_mismatch(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

}  // namespace dw
