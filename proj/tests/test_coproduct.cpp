#include <doctest.h>

#include <random>

#include "cgaskey/coproduct.hpp"
#include "cgaskey/errors.hpp"
#include "oracles.hpp"

using namespace cgaskey;

namespace {

KrawtchoukQuad from_charges(long c1, long c2, long c3) {
    const long s = c1 + c2 + c3;
    return {Scalar(c1 + c2, s), Scalar(c1, c1 + c2), Scalar(c1, s), Scalar(c2, c2 + c3)};
}

const std::vector<Scalar> kLabels{Scalar(1), Scalar(2), Scalar(3)};

}  // namespace

TEST_CASE("coefficient examples") {
    const Scalar a(1), b(1, 2);
    const auto hahn = FamilyInstance::hahn(a, b, 2, 3, 5);
    const auto c = coproduct_coeffs(hahn);
    for (int N = 0; N < 5; ++N)
        for (int n = 0; n <= N + 1; ++n)
            CHECK(c.x(n, N + 1 - n) == (Scalar(n + 1) + a + b) / (Scalar(2 * n - N) + a + b));

    const auto kc = coproduct_coeffs(FamilyInstance::krawtchouk(Scalar(1, 3), 2, 3, 5));
    for (int n = 0; n < 4; ++n) {
        for (int m = 0; m < 4 - n; ++m) {
            if (n + m >= 1) {
                CHECK(kc.x(n, m) == Scalar(1));
                CHECK(kc.y(n, m) == Scalar(1));
            }
            CHECK(kc.xp(n, m) == Scalar(1, 3));
            CHECK(kc.yp(n, m) == Scalar(2, 3));
        }
    }

    const auto dc = coproduct_coeffs(FamilyInstance::dual_hahn(1, 2, 3, 5));
    for (int n = 0; n < 4; ++n) CHECK(dc.xp(n, 0) == Scalar(1));
}

TEST_CASE("delta matrices on small blocks") {
    const auto kr = FamilyInstance::krawtchouk(Scalar(1, 3), 2, 3, 3);
    const auto d = build_delta(kr, TensorModule::for_family(kr));
    REQUIRE(d.dE.block(0).rows() == 2);
    CHECK(d.dE.block(0)(0, 0) == Scalar(1));
    CHECK(d.dE.block(0)(1, 0) == Scalar(1));

    const auto hahn = FamilyInstance::hahn(1, Scalar(1, 2), Scalar(7, 3), Scalar(2, 5), 3);
    const auto dh = build_delta(hahn, TensorModule::for_family(hahn));
    const auto kernel = oracle::nullspace(dh.dF.block(1));
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0][1] / kernel[0][0] == Scalar(-1, 4));

    for (int N = 0; N <= 3; ++N)
        for (std::size_t i = 0; i <= static_cast<std::size_t>(N); ++i)
            CHECK(dh.dHK.block(N)(i, i) == Scalar(7, 3) + Scalar(2, 5) + Scalar(2 * N));
}

TEST_CASE("tensor module validation") {
    const auto inst = FamilyInstance::hahn(1, Scalar(1, 2), 2, 3, 4);
    auto tm = TensorModule::for_family(inst);
    CHECK(tm.left.levels == 5);
    tm.right.algebra = Algebra::sl2();
    CHECK_THROWS_AS(tm.validate(), InvalidParameter);
    auto short_tm = TensorModule::for_family(inst);
    short_tm.left.levels = 2;
    CHECK_THROWS_AS(short_tm.validate(), InvalidParameter);
}

TEST_CASE("homomorphism on random draws") {
    std::mt19937_64 rng(31);
    for (auto kind : kAllFamilies) {
        for (int draw = 0; draw < 3; ++draw) {
            const auto inst = random_instance(kind, rng, 8);
            CHECK_MESSAGE(check_homomorphism(inst, TensorModule::for_family(inst)).passed(), to_string(kind));
        }
    }
}

TEST_CASE("oscillator coproduct keeps [E,F] = 1") {
    const auto hahn = FamilyInstance::hahn(1, Scalar(1, 2), 2, 3, 5);
    const auto d = build_delta(hahn, TensorModule::for_family(hahn));
    const auto c = commutator(d.dE, d.dF);
    for (int N : c.levels()) {
        if (N >= 5) continue;
        CHECK(c.block(N) == Matrix::identity(static_cast<std::size_t>(N + 1)));
    }
}

TEST_CASE("corrupted y is caught by the homomorphism check") {
    const auto hahn = FamilyInstance::hahn(1, Scalar(1, 2), 2, 3, 5);
    const auto tm = TensorModule::for_family(hahn);
    auto coeffs = coproduct_coeffs(hahn);
    coeffs.y = [](int, int) { return Scalar(1); };
    const auto report = check_homomorphism(hahn.algebra(), build_delta(coeffs, tm));
    CHECK_FALSE(report.passed());
    REQUIRE(report.first_failure() != nullptr);
    CHECK(report.first_failure()->witness.has_value());
}

TEST_CASE("algebraic forms agree with contiguity data") {
    std::mt19937_64 rng(32);
    for (auto kind : kAllFamilies) {
        for (int draw = 0; draw < 3; ++draw) {
            const auto inst = random_instance(kind, rng, 8);
            CHECK_MESSAGE(check_algebraic_form(inst, TensorModule::for_family(inst)).passed(), to_string(kind));
        }
    }
}

TEST_CASE("algebraic form substitutions") {
    const Scalar a(1, 3), b(2, 7);
    const auto hahn = FamilyInstance::hahn(a, b, Scalar(5, 2), Scalar(7, 3), 5);
    const auto hf = algebraic_form(hahn);
    for (int n = 0; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
            const Scalar D = Scalar(2 * (n - m)) + Scalar(2) * (a + b) + Scalar(2);
            CHECK(hf.x(n, m) == (Scalar(2 * n) + Scalar(2) * (a + b) + Scalar(2)) / D);
        }
    }

    const Scalar q(1, 4), qa(2, 3), qb(5, 7);
    const auto qh = FamilyInstance::q_hahn(q, qa, qb, 2, 3, 5);
    const auto qf = algebraic_form(qh);
    for (int n = 0; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
            const Scalar D = Scalar(1) - qa * qb * q.pow(n - m + 1);
            CHECK(qf.x(n, m) == (Scalar(1) - q * qa * qb * q.pow(n)) / D);
        }
    }

    const auto racah = FamilyInstance::racah(a, b, Scalar(5, 2), Scalar(7, 3), 5);
    const auto rf = algebraic_form(racah);
    for (int n = 0; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
            const Scalar D = Scalar(2 * (n - m)) + Scalar(2) * (a + b) + Scalar(2);
            CHECK(rf.y(n, m) == (Scalar(2) * (a + b) + Scalar(2) - Scalar(2 * m)) / D);
        }
    }
}

TEST_CASE("a wrong algebraic form is reported") {
    const auto inst = FamilyInstance::racah(Scalar(1, 3), Scalar(2, 7), Scalar(5, 2), Scalar(7, 3), 5);
    auto f = algebraic_form(inst);
    const auto good = f.yp;
    f.yp = [good](int n, int m) { return n == 1 && m == 2 ? good(n, m) + Scalar(1) : good(n, m); };
    const auto report = check_algebraic_form(inst, TensorModule::for_family(inst), f);
    CHECK_FALSE(report.passed());
    CHECK(report.first_failure()->name == "algebraic-form-F");
}

TEST_CASE("standard sl2 coproduct from dual hahn") {
    const std::vector<Scalar> labels{Scalar(2), Scalar(3), Scalar(5, 2), Scalar(7, 3)};
    for (const auto& l1 : labels)
        for (const auto& l2 : labels) CHECK(check_standard_sl2_specialization(l1, l2, 8).passed());
    auto c = coproduct_coeffs(FamilyInstance::dual_hahn(Scalar(1, 3), 2, 3, 6));
    CHECK_FALSE(check_standard_sl2_specialization(c, 6).passed());
}

TEST_CASE("q-racah twist to the standard U_q coproduct") {
    const Scalar q(1, 4), k1(3), k2(5);
    CHECK(check_twist_qracah_specialization(q, k1, k2, 6).passed());
    CHECK(check_twist_qracah_specialization(Scalar(9, 16), Scalar(-2, 3), Scalar(7, 5), 5).passed());
    // kappa1 = 2 at q = 1/4 makes V_{lambda1} degenerate at level 2
    CHECK_THROWS_AS(check_twist_qracah_specialization(q, Scalar(2), Scalar(3), 6), InvalidParameter);

    const auto inst = FamilyInstance::q_racah(q, k1 * k1 / q, Scalar(0), k1, k2, 4);
    const auto tm = TensorModule::for_family(inst);
    const auto coeffs = coproduct_coeffs(inst);
    // beta = 0: the y' numerator factor (1 - kappa2 beta/K2) is 1
    const auto f = algebraic_form(inst);
    for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m) CHECK(f.yp(n, m) == coeffs.yp(n, m));

    const auto d = build_delta(inst, tm);
    // block 0 -> 1: (0,0) goes to kappa1^-1 K(x)E + E(x)1, i.e. (1/kappa1)(0,1) + (1,0)
    CHECK(d.dE.block(0)(0, 0) == Scalar(1));
    CHECK(d.dE.block(0)(1, 0) == Scalar(1));

    auto bad = d;
    bad.dF.block(2)(0, 1) = bad.dF.block(2)(0, 1) + Scalar(1, 3);
    CHECK_FALSE(check_twist_qracah_specialization(inst, bad).passed());
}

TEST_CASE("racah coefficients approach dual hahn ones") {
    const std::vector<Scalar> betas{Scalar(1000), Scalar(1000000)};
    CHECK(limit_racah_to_dual_hahn(Scalar(1, 3), Scalar(5, 2), Scalar(7, 3), betas, 4).passed());
    CHECK(limit_racah_to_dual_hahn(Scalar(1), Scalar(2), Scalar(3), betas, 4).passed());

    const auto target = coproduct_coeffs(FamilyInstance::dual_hahn(Scalar(1, 3), Scalar(5, 2), Scalar(7, 3), 4));
    auto wrong = target;
    wrong.x = [x = target.x](int n, int m) { return x(n, m) + Scalar(1, 5000); };
    std::vector<CoproductCoeffs> seq;
    for (const auto& b : betas)
        seq.push_back(coproduct_coeffs(FamilyInstance::racah(Scalar(1, 3), b, Scalar(5, 2), Scalar(7, 3), 4)));
    CHECK_FALSE(limit_racah_to_dual_hahn(wrong, seq, betas, 4).passed());
}

TEST_CASE("coassociativity examples") {
    const auto central = krawtchouk_coassoc({Scalar(1, 2), Scalar(1, 3), Scalar(1, 6), Scalar(2, 5)}, kLabels, 4);
    CHECK(central.constraint_holds);
    CHECK(central.lhs_equals_rhs);
    CHECK(central.report.passed());

    const auto halves = krawtchouk_coassoc({Scalar(1, 2), Scalar(1, 2), Scalar(1, 2), Scalar(1, 2)}, kLabels, 4);
    CHECK_FALSE(halves.constraint_holds);
    CHECK_FALSE(halves.lhs_equals_rhs);

    const auto half_way = krawtchouk_coassoc({Scalar(1, 2), Scalar(1, 3), Scalar(1, 6), Scalar(1, 2)}, kLabels, 4);
    CHECK_FALSE(half_way.constraint_holds);
    CHECK_FALSE(half_way.lhs_equals_rhs);

    CHECK_THROWS_AS(krawtchouk_coassoc({Scalar(0), Scalar(1, 3), Scalar(1, 6), Scalar(1, 2)}, kLabels, 4),
                    InvalidParameter);
    CHECK_THROWS_AS(krawtchouk_coassoc({Scalar(1, 2), Scalar(1), Scalar(1, 6), Scalar(1, 2)}, kLabels, 4),
                    InvalidParameter);
}

TEST_CASE("constraint holds exactly when the recouplings agree") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<long> charge(1, 12), num(1, 19);
    for (int t = 0; t < 40; ++t) {
        KrawtchoukQuad quad;
        if (t % 2 == 0) {
            quad = from_charges(charge(rng), charge(rng), charge(rng));
        } else {
            quad = {Scalar(num(rng), 20), Scalar(num(rng), 20), Scalar(num(rng), 20), Scalar(num(rng), 20)};
        }
        const auto res = krawtchouk_coassoc(quad, kLabels, 3);
        CHECK(res.constraint_holds == res.lhs_equals_rhs);
        if (t % 2 == 0) CHECK(res.constraint_holds);
    }
}

TEST_CASE("tensor product of single-module operators") {
    const ModuleSpec m{Algebra::osc(), Scalar(2), 4};
    const auto g = build_generators(m);
    const auto id = GradedOperator::identity(g.E.space());
    const auto ei = tensor_product(g.E, id, 3);
    CHECK(ei.degree() == 1);
    // (n, N-n) -> (n+1, N-n)
    CHECK(ei.block(1)(1, 0) == Scalar(1));
    CHECK(ei.block(1)(2, 1) == Scalar(1));
    CHECK(ei.block(1)(0, 0) == Scalar(0));
    const auto ff = tensor_product(id, g.F, 3);
    CHECK(ff.block(2)(0, 0) == phi(m.algebra, m.label, 2));
}
