#include "cgaskey/graded_operator.hpp"

#include <stdexcept>
#include <string>

namespace cgaskey {

GradedSpace GradedSpace::single(int levels) {
    return GradedSpace(std::vector<std::size_t>(static_cast<std::size_t>(levels) + 1, 1));
}

GradedSpace GradedSpace::tensor(int n_max) {
    std::vector<std::size_t> dims;
    for (int N = 0; N <= n_max; ++N) dims.push_back(static_cast<std::size_t>(N) + 1);
    return GradedSpace(std::move(dims));
}

GradedSpace GradedSpace::triple(int n_max) {
    std::vector<std::size_t> dims;
    for (int N = 0; N <= n_max; ++N) dims.push_back(static_cast<std::size_t>((N + 1) * (N + 2) / 2));
    return GradedSpace(std::move(dims));
}

std::size_t GradedSpace::dim(int level) const {
    return contains(level) ? dims_[static_cast<std::size_t>(level)] : 0;
}

GradedOperator::GradedOperator(GradedSpace space, int degree) : space_(std::move(space)), degree_(degree) {
    for (int N = 0; N <= space_.top(); ++N) {
        const int target = N + degree_;
        if (target > space_.top()) continue;
        blocks_.emplace(N, Matrix(space_.dim(target), space_.dim(N)));
    }
}

GradedOperator GradedOperator::identity(const GradedSpace& space) {
    GradedOperator op(space, 0);
    for (auto& [N, m] : op.blocks_) m = Matrix::identity(space.dim(N));
    return op;
}

GradedOperator GradedOperator::diagonal(const GradedSpace& space, const std::vector<Vector>& values) {
    GradedOperator op(space, 0);
    for (auto& [N, m] : op.blocks_) {
        const auto& v = values.at(static_cast<std::size_t>(N));
        if (v.size() != space.dim(N)) throw std::invalid_argument("diagonal: block size mismatch");
        m = Matrix::diagonal(v);
    }
    return op;
}

const Matrix& GradedOperator::block(int level) const {
    auto it = blocks_.find(level);
    if (it == blocks_.end()) throw std::out_of_range("no block at level " + std::to_string(level));
    return it->second;
}

Matrix& GradedOperator::block(int level) {
    auto it = blocks_.find(level);
    if (it == blocks_.end()) throw std::out_of_range("no block at level " + std::to_string(level));
    return it->second;
}

void GradedOperator::set_block(int level, Matrix m) {
    if (m.rows() != space_.dim(level + degree_) || m.cols() != space_.dim(level)) {
        throw std::invalid_argument("set_block: shape does not match the graded space");
    }
    block(level) = std::move(m);
}

std::vector<int> GradedOperator::levels() const {
    std::vector<int> out;
    for (const auto& [N, m] : blocks_) out.push_back(N);
    return out;
}

GradedOperator GradedOperator::inverse_diagonal() const {
    if (degree_ != 0) throw std::invalid_argument("inverse_diagonal: degree must be 0");
    GradedOperator out = *this;
    for (auto& [N, m] : out.blocks_) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (i != j && !m(i, j).is_zero()) throw std::invalid_argument("inverse_diagonal: block not diagonal");
            }
            m(i, i) = m(i, i).inverse();
        }
    }
    return out;
}

GradedOperator& GradedOperator::operator*=(const Scalar& factor) {
    for (auto& [N, m] : blocks_) m *= factor;
    return *this;
}

GradedOperator GradedOperator::combine(const GradedOperator& lhs, const GradedOperator& rhs, bool subtract) {
    if (lhs.degree_ != rhs.degree_ || !(lhs.space_ == rhs.space_)) {
        throw std::invalid_argument("graded sum: degree or space mismatch");
    }
    GradedOperator out;
    out.space_ = lhs.space_;
    out.degree_ = lhs.degree_;
    for (const auto& [N, m] : lhs.blocks_) {
        auto it = rhs.blocks_.find(N);
        if (it == rhs.blocks_.end()) continue;
        out.blocks_.emplace(N, subtract ? m - it->second : m + it->second);
    }
    return out;
}

GradedOperator operator+(const GradedOperator& lhs, const GradedOperator& rhs) {
    return GradedOperator::combine(lhs, rhs, false);
}

GradedOperator operator-(const GradedOperator& lhs, const GradedOperator& rhs) {
    return GradedOperator::combine(lhs, rhs, true);
}

GradedOperator operator*(const GradedOperator& lhs, const GradedOperator& rhs) {
    if (!(lhs.space_ == rhs.space_)) throw std::invalid_argument("graded product: space mismatch");
    GradedOperator out;
    out.space_ = lhs.space_;
    out.degree_ = lhs.degree_ + rhs.degree_;
    const auto& space = lhs.space_;
    for (const auto& [N, inner] : rhs.blocks_) {
        const int mid = N + rhs.degree_;
        const int target = mid + lhs.degree_;
        if (target > space.top()) continue;
        if (mid < 0 || target < 0) {
            out.blocks_.emplace(N, Matrix(space.dim(target), space.dim(N)));
            continue;
        }
        auto it = lhs.blocks_.find(mid);
        if (it == lhs.blocks_.end()) continue;
        out.blocks_.emplace(N, it->second * inner);
    }
    return out;
}

GradedOperator commutator(const GradedOperator& lhs, const GradedOperator& rhs) {
    return lhs * rhs - rhs * lhs;
}

}  // namespace cgaskey
