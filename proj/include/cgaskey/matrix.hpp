#pragma once

#include <cstddef>
#include <vector>

#include "cgaskey/scalar.hpp"

namespace cgaskey {

using Vector = std::vector<Scalar>;

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& entries);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& values);
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& factor);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Matrix operator*(const Scalar& lhs, Matrix rhs) { return rhs *= lhs; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Vector operator*(const Matrix& lhs, const Vector& rhs);

    friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Rank via fraction-free elimination.
std::size_t rank(const Matrix& m);

/// Basis of the right nullspace {v : m v = 0}. Rows are scaled to integers and
/// reduced with Bareiss elimination; basis vectors come back in reduced form
/// with a 1 in their free coordinate.
std::vector<Vector> nullspace(const Matrix& m);

}  // namespace cgaskey
