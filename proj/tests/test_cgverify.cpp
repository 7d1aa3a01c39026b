#include <doctest.h>

#include <random>

#include "cgaskey/clebsch_gordan.hpp"
#include "cgaskey/errors.hpp"
#include "cgaskey/hypergeometric.hpp"
#include "oracles.hpp"

using namespace cgaskey;

namespace {

bool proportional(const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("cg block examples") {
    const auto dh = FamilyInstance::dual_hahn(1, 2, 3, 4);
    CHECK(cg_block(dh, 0).P == Matrix::identity(1));
    const auto b1 = cg_block(dh, 1);
    CHECK(b1.P(0, 0) == Scalar(1));
    CHECK(b1.P(0, 1) == Scalar(1));
    CHECK(b1.P(1, 0) == Scalar(1));
    CHECK(b1.P(1, 1) == Scalar(-3, 2));
    CHECK_THROWS_AS(cg_block(dh, 5), InvalidParameter);

    const auto kr = FamilyInstance::krawtchouk(Scalar(1, 3), 2, 3, 2);
    const auto k1 = cg_block(kr, 1);
    CHECK(k1.P(1, 0) == Scalar(1));
    CHECK(k1.P(1, 1) == Scalar(-2));

    std::mt19937_64 rng(41);
    for (auto kind : kAllFamilies) {
        const auto inst = random_instance(kind, rng, 5);
        for (int N = 0; N <= 5; ++N) {
            const auto b = cg_block(inst, N);
            for (int n = 0; n <= N; ++n) {
                const Scalar expected = is_q_family(kind) ? q_binomial(N, n, inst.q()) : binomial(N, n);
                CHECK(b.P(static_cast<std::size_t>(n), 0) == expected);
            }
        }
    }
}

TEST_CASE("raising and lowering on random draws") {
    std::mt19937_64 rng(42);
    for (auto kind : kAllFamilies) {
        for (int draw = 0; draw < 3; ++draw) {
            const auto inst = random_instance(kind, rng, 8);
            const auto tm = TensorModule::for_family(inst);
            for (int N = 0; N < 8; ++N) CHECK_MESSAGE(verify_raising(inst, tm, N).passed(), to_string(kind));
            for (int N = 1; N <= 8; ++N) CHECK_MESSAGE(verify_lowering(inst, tm, N).passed(), to_string(kind));
        }
    }
}

TEST_CASE("raising from block 0 in the krawtchouk case") {
    const auto kr = FamilyInstance::krawtchouk(Scalar(1, 3), 2, 3, 3);
    const auto d = build_delta(kr, TensorModule::for_family(kr));
    const Vector image = d.dE.block(0) * Vector{Scalar(1)};
    CHECK(image == Vector{Scalar(1), Scalar(1)});
    CHECK(image == cg_block(kr, 1).P.column(0));
}

TEST_CASE("dropping the binomial prefactor breaks raising") {
    const auto inst = FamilyInstance::hahn(1, Scalar(1, 2), 2, 3, 5);
    const auto delta = build_delta(inst, TensorModule::for_family(inst));
    const PolyFn stripped = [inst](int n, int k, int N) {
        return n < 0 || n > N ? Scalar(0) : poly_value(inst, n, k, N) / binomial(N, n);
    };
    bool caught = false;
    for (int N = 0; N < 5; ++N) caught = caught || !verify_raising(delta, stripped, N).passed();
    CHECK(caught);
    CHECK_FALSE(verify_oracle(delta, stripped, 5).passed());
}

TEST_CASE("lowering eigenvalues") {
    const Scalar l1(2), l2(3);
    const auto dh = FamilyInstance::dual_hahn(l1 - Scalar(1), l1, l2, 6);
    for (int N = 1; N <= 6; ++N)
        for (int k = 0; k <= N; ++k)
            CHECK(phi(dh.algebra(), coupled_label(dh.algebra(), l1, l2, k), N - k) ==
                  -Scalar(N - k) * (Scalar(N + k - 1) + l1 + l2));

    const Scalar q(1, 4), k1(3), k2(5);
    const auto qr = FamilyInstance::q_racah(q, Scalar(1, 5), Scalar(1, 7), k1, k2, 5);
    for (int N = 1; N <= 5; ++N)
        for (int k = 0; k <= N; ++k)
            CHECK(phi(qr.algebra(), coupled_label(qr.algebra(), k1, k2, k), N - k) ==
                  (Scalar(1) - q.pow(N - k)) * (Scalar(1) - k1 * k1 * k2 * k2 * q.pow(N + k - 1)));

    // the k = N column is killed by dF
    const auto tm = TensorModule::for_family(qr);
    const auto d = build_delta(qr, tm);
    for (int N = 1; N <= 5; ++N) {
        const Vector image = d.dF.block(N) * cg_block(qr, N).P.column(static_cast<std::size_t>(N));
        for (const auto& e : image) CHECK(e.is_zero());
    }
}

TEST_CASE("dF is diagonal in the CG basis") {
    std::mt19937_64 rng(43);
    for (auto kind : kAllFamilies) {
        const auto inst = random_instance(kind, rng, 6);
        const auto d = build_delta(inst, TensorModule::for_family(inst));
        for (int N = 1; N <= 6; ++N) {
            Matrix diag(static_cast<std::size_t>(N), static_cast<std::size_t>(N + 1));
            for (int k = 0; k < N; ++k)
                diag(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) =
                    phi(inst.algebra(), coupled_label(inst.algebra(), inst.label1(), inst.label2(), k), N - k);
            CHECK(d.dF.block(N) * cg_block(inst, N).P == cg_block(inst, N - 1).P * diag);
        }
    }
}

TEST_CASE("lowest weight oracle examples") {
    const auto hahn = FamilyInstance::hahn(1, Scalar(1, 2), Scalar(7, 3), Scalar(2, 5), 3);
    const auto blocks = lowest_weight_oracle(hahn, TensorModule::for_family(hahn));
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[0].P(0, 0) == Scalar(1));
    CHECK(blocks[1].P(0, 1) == Scalar(1));
    CHECK(blocks[1].P(1, 1) == Scalar(-1, 4));

    const auto dh = FamilyInstance::dual_hahn(1, 2, 3, 3);
    const auto sl2 = lowest_weight_oracle(dh, TensorModule::for_family(dh));
    CHECK(sl2[1].P(1, 1) == Scalar(-3, 2));
}

TEST_CASE("oracle reproduces every CG block") {
    std::mt19937_64 rng(44);
    for (auto kind : kAllFamilies) {
        for (int draw = 0; draw < 3; ++draw) {
            const auto inst = random_instance(kind, rng, 8);
            const auto tm = TensorModule::for_family(inst);
            const auto oracle_blocks = lowest_weight_oracle(inst, tm);
            for (int N = 0; N <= 8; ++N) CHECK(oracle_blocks[static_cast<std::size_t>(N)] == cg_block(inst, N));
            CHECK(verify_oracle(inst, tm).passed());
        }
    }
}

TEST_CASE("top columns span the dF kernel") {
    std::mt19937_64 rng(45);
    for (auto kind : kAllFamilies) {
        const auto inst = random_instance(kind, rng, 6);
        const auto d = build_delta(inst, TensorModule::for_family(inst));
        for (int N = 0; N <= 6; ++N) {
            const auto kernel = oracle::nullspace(d.dF.block(N));
            REQUIRE(kernel.size() == 1);
            CHECK(proportional(kernel[0], cg_block(inst, N).P.column(static_cast<std::size_t>(N))));
        }
    }
}

TEST_CASE("degenerate dF raises a kernel dimension error") {
    const auto inst = FamilyInstance::hahn(1, Scalar(1, 2), 2, 3, 3);
    auto d = build_delta(inst, TensorModule::for_family(inst));
    d.dF.block(2) = Matrix(2, 3);
    CHECK_THROWS_AS(lowest_weight_oracle(d, poly_function(inst), 3), KernelDimensionError);
    CHECK_FALSE(verify_oracle(d, poly_function(inst), 3).passed());
}

TEST_CASE("orthogonality weight examples") {
    const auto dh = FamilyInstance::dual_hahn(1, 2, 3, 4);
    const auto w0 = orthogonality_weights(dh, 0);
    CHECK(w0.omega == Vector{Scalar(1)});
    CHECK(w0.omega_prime == Vector{Scalar(1)});
    const auto w1 = orthogonality_weights(dh, 1);
    CHECK(w1.omega == Vector{Scalar(1), Scalar(2, 3)});
    CHECK(w1.omega_prime == Vector{Scalar(5, 3), Scalar(5, 2)});

    const auto kr = FamilyInstance::krawtchouk(Scalar(1, 2), 2, 3, 4);
    for (int N = 0; N <= 4; ++N) {
        const auto w = orthogonality_weights(kr, N);
        for (const auto& o : w.omega) CHECK(o > Scalar(0));
        for (const auto& o : w.omega_prime) CHECK(o > Scalar(0));
    }
}

TEST_CASE("orthogonality system is one-dimensional on random draws") {
    std::mt19937_64 rng(46);
    for (auto kind : kAllFamilies) {
        for (int draw = 0; draw < 3; ++draw) {
            const auto inst = random_instance(kind, rng, 8);
            CHECK(verify_orthogonality(inst).passed());
            for (int N = 2; N <= 5; ++N) {
                const auto b = cg_block(inst, N);
                Matrix system(static_cast<std::size_t>(N * (N + 1) / 2), static_cast<std::size_t>(N + 1));
                std::size_t row = 0;
                for (int k = 0; k <= N; ++k)
                    for (int l = k + 1; l <= N; ++l, ++row)
                        for (int n = 0; n <= N; ++n)
                            system(row, static_cast<std::size_t>(n)) =
                                b.P(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) *
                                b.P(static_cast<std::size_t>(n), static_cast<std::size_t>(l));
                const auto ref = oracle::nullspace(system);
                REQUIRE(ref.size() == 1);
                CHECK(proportional(ref[0], orthogonality_weights(b).omega));
            }
        }
    }
}

TEST_CASE("orthogonality errors") {
    Matrix twins(2, 2);
    twins(0, 0) = twins(0, 1) = twins(1, 0) = twins(1, 1) = Scalar(1);
    CHECK_THROWS_AS(orthogonality_weights(CGBlock{1, twins}), SolutionSpaceError);
    CHECK_THROWS_AS(orthogonality_weights(CGBlock{2, Matrix::identity(3)}), SolutionSpaceError);

    const auto inst = FamilyInstance::racah(Scalar(1, 3), Scalar(2, 7), Scalar(5, 2), Scalar(7, 3), 5);
    const PolyFn bent = [inst](int n, int k, int N) {
        const Scalar v = poly_value(inst, n, k, N);
        return n == 1 && k == 2 ? v + Scalar(1) : v;
    };
    const auto report = verify_orthogonality(bent, 5);
    CHECK_FALSE(report.passed());
    CHECK(report.first_failure()->witness.has_value());
}

TEST_CASE("weight grading") {
    const auto dh = FamilyInstance::dual_hahn(1, 2, 3, 4);
    const auto d = build_delta(dh, TensorModule::for_family(dh));
    CHECK(d.dHK.block(3)(2, 2) == Scalar(2 + 3 + 6));
    CHECK(d.dHK.block(0)(0, 0) == Scalar(5));
    CHECK(verify_weight_grading(dh, TensorModule::for_family(dh)).passed());

    const Scalar q(1, 4);
    const auto qr = FamilyInstance::q_racah(q, Scalar(1, 5), Scalar(1, 7), 3, 5, 4);
    const auto dq = build_delta(qr, TensorModule::for_family(qr));
    CHECK(dq.dHK.block(2)(1, 1) == Scalar(15) * q * q);
    CHECK(verify_weight_grading(qr, TensorModule::for_family(qr)).passed());

    auto bad = d;
    bad.dHK.block(2)(0, 0) = Scalar(0);
    CHECK_FALSE(verify_weight_grading(dh.algebra(), dh.label1(), dh.label2(), bad).passed());
}

TEST_CASE("CG blocks are invertible") {
    std::mt19937_64 rng(47);
    for (auto kind : kAllFamilies) CHECK(verify_invertible(random_instance(kind, rng, 8)).passed());
}
