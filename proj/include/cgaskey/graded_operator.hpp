#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cgaskey/matrix.hpp"

namespace cgaskey {

/// Dimensions of the weight levels 0..top() of a truncated graded space.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

    /// One basis vector per level: a truncated lowest-weight module.
    static GradedSpace single(int levels);
    /// Level N spanned by (n, N-n): a truncated two-fold tensor product.
    static GradedSpace tensor(int n_max);
    /// Level N spanned by (a, b, c) with a+b+c = N.
    static GradedSpace triple(int n_max);

    [[nodiscard]] int top() const { return static_cast<int>(dims_.size()) - 1; }
    /// Zero for levels outside 0..top().
    [[nodiscard]] std::size_t dim(int level) const;
    [[nodiscard]] bool contains(int level) const { return level >= 0 && level <= top(); }

    friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

private:
    std::vector<std::size_t> dims_;
};

/// A linear map of fixed degree on a truncated graded space, stored block-wise:
/// block N maps level N to level N + degree. Blocks exist for every source level
/// whose target is not above the truncation; targets below level 0 give empty
/// (zero-row) blocks.
class GradedOperator {
public:
    GradedOperator() = default;
    GradedOperator(GradedSpace space, int degree);

    static GradedOperator identity(const GradedSpace& space);
    /// Degree-0 operator with block N equal to diag(values(N)).
    static GradedOperator diagonal(const GradedSpace& space, const std::vector<Vector>& values);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const GradedSpace& space() const { return space_; }

    [[nodiscard]] bool has_block(int level) const { return blocks_.contains(level); }
    [[nodiscard]] const Matrix& block(int level) const;
    Matrix& block(int level);
    void set_block(int level, Matrix m);
    [[nodiscard]] std::vector<int> levels() const;

    /// Degree-0 operators only: the inverse of each (square) block.
    [[nodiscard]] GradedOperator inverse_diagonal() const;

    GradedOperator& operator*=(const Scalar& factor);
    /// Same degree; result keeps the blocks present in both operands.
    friend GradedOperator operator+(const GradedOperator& lhs, const GradedOperator& rhs);
    friend GradedOperator operator-(const GradedOperator& lhs, const GradedOperator& rhs);
    friend GradedOperator operator*(const Scalar& factor, GradedOperator op) { return op *= factor; }
    /// Composition lhs ∘ rhs; degrees add. Defined on source levels where both
    /// factors have blocks, or where rhs already lands below level 0.
    friend GradedOperator operator*(const GradedOperator& lhs, const GradedOperator& rhs);

    friend bool operator==(const GradedOperator&, const GradedOperator&) = default;

private:
    static GradedOperator combine(const GradedOperator& lhs, const GradedOperator& rhs, bool subtract);

    GradedSpace space_;
    int degree_ = 0;
    std::map<int, Matrix> blocks_;
};

/// Commutator lhs∘rhs - rhs∘lhs.
GradedOperator commutator(const GradedOperator& lhs, const GradedOperator& rhs);

}  // namespace cgaskey
