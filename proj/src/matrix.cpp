#include "cgaskey/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cgaskey {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& values) {
    if (values.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& factor) {
    for (auto& x : data_) x *= factor;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t t = 0; t < lhs.cols_; ++t) {
            const Scalar& a = lhs(i, t);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(t, j);
        }
    }
    return out;
}

Vector operator*(const Matrix& lhs, const Vector& rhs) {
    if (lhs.cols_ != rhs.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vector out(lhs.rows_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t j = 0; j < lhs.cols_; ++j) out[i] += lhs(i, j) * rhs[j];
    }
    return out;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix integer_rows(const Matrix& m) {
    IntMatrix a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            a[r][c] = m(r, c).raw().get_num() * (lcm / m(r, c).raw().get_den());
        }
    }
    return a;
}

/// Bareiss forward elimination in place; returns pivot columns.
std::vector<std::size_t> bareiss(IntMatrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = row + 1; i < a.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]);
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    auto a = integer_rows(m);
    return bareiss(a, m.cols()).size();
}

std::vector<Vector> nullspace(const Matrix& m) {
    auto a = integer_rows(m);
    const auto pivots = bareiss(a, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        // Back substitution through the echelon rows.
        for (std::size_t r = pivots.size(); r-- > 0;) {
            const std::size_t pc = pivots[r];
            Scalar acc = 0;
            for (std::size_t j = pc + 1; j < m.cols(); ++j) {
                if (a[r][j] != 0) acc += Scalar(mpq_class(a[r][j])) * v[j];
            }
            v[pc] = -acc / Scalar(mpq_class(a[r][pc]));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace cgaskey
