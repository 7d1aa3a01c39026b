#include "cgaskey/clebsch_gordan.hpp"

#include <string>

#include "cgaskey/errors.hpp"

namespace cgaskey {

CGBlock cg_block(const FamilyInstance& inst, int N) {
    if (N < 0 || N > inst.n_max()) throw InvalidParameter("cg_block: level outside 0..n_max");
    return cg_block(poly_function(inst), N);
}

CGBlock cg_block(const PolyFn& poly, int N) {
    const auto dim = static_cast<std::size_t>(N + 1);
    CGBlock b{N, Matrix(dim, dim)};
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= N; ++k) b.P(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) = poly(n, k, N);
    }
    return b;
}

namespace {

void compare_vectors(CheckRecorder& rec, const Vector& lhs, const Vector& rhs, int N, int k, const char* what) {
    for (std::size_t n = 0; n < lhs.size(); ++n) {
        rec.expect_equal(lhs[n], rhs[n], {{"N", N}, {"k", k}, {"n", static_cast<long>(n)}}, what);
    }
}

}  // namespace

Report verify_raising(const FamilyInstance& inst, const TensorModule& tm, int N) {
    return verify_raising(build_delta(inst, tm), poly_function(inst), N);
}

Report verify_raising(const Delta& delta, const PolyFn& poly, int N) {
    CheckRecorder rec("cg-raising", "block " + std::to_string(N) + " -> " + std::to_string(N + 1));
    if (!delta.dE.has_block(N)) throw InvalidParameter("verify_raising: level " + std::to_string(N) + " at the truncation");
    const auto lower = cg_block(poly, N);
    const auto upper = cg_block(poly, N + 1);
    for (int k = 0; k <= N; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        compare_vectors(rec, delta.dE.block(N) * lower.P.column(ku), upper.P.column(ku), N, k, "dE col_k(N) vs col_k(N+1)");
    }
    return {"cg-raising", {rec.finish()}};
}

Report verify_lowering(const FamilyInstance& inst, const TensorModule& tm, int N) {
    return verify_lowering(inst.algebra(), inst.label1(), inst.label2(), build_delta(inst, tm), poly_function(inst), N);
}

Report verify_lowering(const Algebra& algebra, const Scalar& label1, const Scalar& label2, const Delta& delta,
                       const PolyFn& poly, int N) {
    CheckRecorder rec("cg-lowering", "block " + std::to_string(N) + " -> " + std::to_string(N - 1));
    if (N < 1 || !delta.dF.has_block(N)) throw InvalidParameter("verify_lowering: level outside 1..n_max");
    const auto upper = cg_block(poly, N);
    for (int k = 0; k <= N; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const Vector image = delta.dF.block(N) * upper.P.column(ku);
        Vector expected(static_cast<std::size_t>(N));
        if (k < N) {
            const Scalar eig = phi(algebra, coupled_label(algebra, label1, label2, k), N - k);
            expected = cg_block(poly, N - 1).P.column(ku);
            for (auto& e : expected) e = e * eig;
        }
        compare_vectors(rec, image, expected, N, k, k < N ? "dF col_k(N) vs phi col_k(N-1)" : "dF annihilates col_N(N)");
    }
    return {"cg-lowering", {rec.finish()}};
}

std::vector<CGBlock> lowest_weight_oracle(const FamilyInstance& inst, const TensorModule& tm) {
    return lowest_weight_oracle(build_delta(inst, tm), poly_function(inst), tm.n_max);
}

std::vector<CGBlock> lowest_weight_oracle(const Delta& delta, const PolyFn& poly, int n_max) {
    std::vector<CGBlock> blocks;
    for (int N = 0; N <= n_max; ++N) {
        const auto dim = static_cast<std::size_t>(N + 1);
        blocks.push_back({N, Matrix(dim, dim)});
    }
    for (int k = 0; k <= n_max; ++k) {
        const auto kernel = nullspace(delta.dF.block(k));
        if (kernel.size() != 1) {
            throw KernelDimensionError("kernel of dF on block " + std::to_string(k) + " has dimension " +
                                       std::to_string(kernel.size()));
        }
        Vector v = kernel.front();
        std::size_t anchor = 0;
        while (anchor < v.size() && v[anchor].is_zero()) ++anchor;
        const Scalar scale = poly(static_cast<int>(anchor), k, k) / v[anchor];
        for (auto& e : v) e = e * scale;
        for (int N = k;; ++N) {
            blocks[static_cast<std::size_t>(N)].P.set_column(static_cast<std::size_t>(k), v);
            if (N == n_max) break;
            v = delta.dE.block(N) * v;
        }
    }
    return blocks;
}

Report verify_oracle(const FamilyInstance& inst, const TensorModule& tm) {
    return verify_oracle(build_delta(inst, tm), poly_function(inst), tm.n_max);
}

Report verify_oracle(const Delta& delta, const PolyFn& poly, int n_max) {
    CheckRecorder rec("cg-oracle", "all blocks N<=" + std::to_string(n_max));
    std::vector<CGBlock> oracle;
    try {
        oracle = lowest_weight_oracle(delta, poly, n_max);
    } catch (const KernelDimensionError& e) {
        rec.expect(false, {{"n_max", n_max}}, "kernel", "dimension 1", e.what());
        return {"cg-oracle", {rec.finish()}};
    }
    for (const auto& ob : oracle) {
        const auto cb = cg_block(poly, ob.N);
        for (std::size_t n = 0; n < cb.P.rows(); ++n) {
            for (std::size_t k = 0; k < cb.P.cols(); ++k) {
                rec.expect_equal(ob.P(n, k), cb.P(n, k),
                                 {{"N", ob.N}, {"n", static_cast<long>(n)}, {"k", static_cast<long>(k)}},
                                 "oracle vs P_n(k,N)");
            }
        }
    }
    return {"cg-oracle", {rec.finish()}};
}

WeightData orthogonality_weights(const FamilyInstance& inst, int N) {
    return orthogonality_weights(cg_block(inst, N));
}

WeightData orthogonality_weights(const CGBlock& block) {
    const std::size_t dim = block.P.rows();
    const auto& P = block.P;
    Matrix system(dim * (dim - 1) / 2, dim);
    std::size_t row = 0;
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t l = k + 1; l < dim; ++l, ++row) {
            for (std::size_t n = 0; n < dim; ++n) system(row, n) = P(n, k) * P(n, l);
        }
    }
    const auto sols = nullspace(system);
    if (sols.size() != 1) {
        throw SolutionSpaceError("orthogonality system at N=" + std::to_string(block.N) + " has solution space of dimension " +
                                 std::to_string(sols.size()));
    }
    Vector omega = sols.front();
    if (omega[0].is_zero()) throw SolutionSpaceError("orthogonality weight Omega_0 vanishes at N=" + std::to_string(block.N));
    const Scalar scale = omega[0].inverse();
    for (auto& w : omega) w = w * scale;

    Vector prime(dim);
    for (std::size_t l = 0; l < dim; ++l) {
        for (std::size_t n = 0; n < dim; ++n) prime[l] += P(n, l) * P(n, l) * omega[n];
        if (prime[l].is_zero()) {
            throw SolutionSpaceError("zero norm Omega'_" + std::to_string(l) + " at N=" + std::to_string(block.N));
        }
    }
    return {block.N, std::move(omega), std::move(prime)};
}

Report verify_orthogonality(const FamilyInstance& inst) {
    return verify_orthogonality(poly_function(inst), inst.n_max());
}

Report verify_orthogonality(const PolyFn& poly, int n_max) {
    CheckRecorder rec("orthogonality", "N<=" + std::to_string(n_max) + ", all k,l");
    for (int N = 0; N <= n_max; ++N) {
        const auto block = cg_block(poly, N);
        WeightData w;
        try {
            w = orthogonality_weights(block);
        } catch (const SolutionSpaceError& e) {
            rec.expect(false, {{"N", N}}, "solution space", "dimension 1, nonzero norms", e.what());
            continue;
        }
        const auto dim = block.P.rows();
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t l = 0; l < dim; ++l) {
                Scalar sum;
                for (std::size_t n = 0; n < dim; ++n) sum += block.P(n, k) * block.P(n, l) * w.omega[n];
                rec.expect_equal(sum, k == l ? w.omega_prime[l] : Scalar(0),
                                 {{"N", N}, {"k", static_cast<long>(k)}, {"l", static_cast<long>(l)}},
                                 "sum_n P_n(k)P_n(l)Omega_n");
            }
        }
    }
    return {"orthogonality", {rec.finish()}};
}

Report verify_weight_grading(const FamilyInstance& inst, const TensorModule& tm) {
    return verify_weight_grading(inst.algebra(), inst.label1(), inst.label2(), build_delta(inst, tm));
}

Report verify_weight_grading(const Algebra& algebra, const Scalar& label1, const Scalar& label2, const Delta& delta) {
    const int top = delta.dHK.space().top();
    CheckRecorder rec("weight-grading", "blocks N<=" + std::to_string(top));
    for (int N = 0; N <= top; ++N) {
        const Scalar eig = algebra.is_q() ? label1 * label2 * algebra.deformation().pow(N)
                                          : label1 + label2 + Scalar(2 * N);
        const Matrix& b = delta.dHK.block(N);
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                rec.expect_equal(b(i, j), i == j ? eig : Scalar(0),
                                 {{"N", N}, {"row", static_cast<long>(i)}, {"col", static_cast<long>(j)}}, "dHK");
            }
        }
    }
    return {"weight-grading", {rec.finish()}};
}

Report verify_invertible(const FamilyInstance& inst) {
    CheckRecorder rec("cg-invertible", "N<=" + std::to_string(inst.n_max()));
    for (int N = 0; N <= inst.n_max(); ++N) {
        const auto r = rank(cg_block(inst, N).P);
        rec.expect(r == static_cast<std::size_t>(N + 1), {{"N", N}}, std::to_string(r), std::to_string(N + 1), "rank");
    }
    return {"cg-invertible", {rec.finish()}};
}

}  // namespace cgaskey
