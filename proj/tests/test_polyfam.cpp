#include <doctest.h>

#include <random>
#include <string>

#include "cgaskey/errors.hpp"
#include "cgaskey/family.hpp"
#include "cgaskey/hypergeometric.hpp"
#include "oracles.hpp"

using namespace cgaskey;

namespace {

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

long witness_index(const Check& c, const std::string& key) {
    REQUIRE(c.witness.has_value());
    for (const auto& [k, v] : c.witness->indices) {
        if (k == key) return v;
    }
    FAIL("missing witness index " << key);
    return -1;
}

}  // namespace

TEST_CASE("k=0 column is the binomial row") {
    std::mt19937_64 rng(11);
    for (auto kind : kAllFamilies) {
        const auto inst = random_instance(kind, rng, 6);
        for (int N = 0; N <= 6; ++N) {
            for (int n = 0; n <= N; ++n) {
                const Scalar expected = is_q_family(kind) ? q_binomial(N, n, inst.q()) : binomial(N, n);
                CHECK(poly_value(inst, n, 0, N) == expected);
            }
        }
    }
}

TEST_CASE("poly_value examples") {
    const auto dh = FamilyInstance::dual_hahn(1, 2, 3, 4);
    CHECK(dh.beta() == Scalar(2));
    CHECK(poly_value(dh, 1, 1, 1) == Scalar(-3, 2));
    const auto kr = FamilyInstance::krawtchouk(Scalar(1, 3), 2, 3, 4);
    CHECK(poly_value(kr, 1, 1, 1) == Scalar(-2));
    CHECK(poly_value(kr, 0, 0, 0) == Scalar(1));
    CHECK(poly_value(kr, -1, 0, 2) == Scalar(0));
    CHECK(poly_value(kr, 3, 0, 2) == Scalar(0));
}

TEST_CASE("poly_value agrees with the term-ratio oracle") {
    std::mt19937_64 rng(12);
    for (auto kind : kAllFamilies) {
        for (int draw = 0; draw < 5; ++draw) {
            const auto inst = random_instance(kind, rng, 6);
            for (int N = 0; N <= 6; ++N)
                for (int n = 0; n <= N; ++n)
                    for (int k = 0; k <= N; ++k) CHECK(poly_value(inst, n, k, N) == oracle::poly(inst, n, k, N));
        }
    }
}

TEST_CASE("hahn and dual hahn are dual under n <-> k") {
    const Scalar alpha(2, 7), beta(5, 3);
    for (int N = 0; N <= 6; ++N) {
        for (int n = 0; n <= N; ++n) {
            for (int k = 0; k <= N; ++k) {
                CHECK(formulas::hahn(alpha, beta, n, k, N) * binomial(N, k) ==
                      formulas::dual_hahn(alpha, beta - Scalar(N), k, n, N) * binomial(N, n));
            }
        }
    }
}

TEST_CASE("contiguity coefficient examples") {
    const auto hahn = FamilyInstance::hahn(1, Scalar(1, 2), 2, 3, 4);
    const auto hd = contiguity(hahn);
    CHECK(hd.alpha2(0, 0) == Scalar(1));
    for (int N = 0; N < 4; ++N)
        for (int n = 0; n <= N + 1; ++n)
            CHECK(hd.alpha1(n, N) == (Scalar(n + 1) + Scalar(3, 2)) / (Scalar(2 * n - N) + Scalar(3, 2)));

    const auto dd = contiguity(FamilyInstance::dual_hahn(1, 2, 3, 4));
    for (int N = 0; N < 4; ++N) {
        for (int n = 0; n <= N + 1; ++n) {
            CHECK(dd.alpha1(n, N) == Scalar(1));
            CHECK(dd.alpha2(n, N) == Scalar(1));
        }
    }

    const auto qd = contiguity(FamilyInstance::q_hahn(Scalar(1, 2), 3, 3, 2, 3, 3));
    CHECK(qd.alpha1(0, 0) == Scalar(7, 16));

    const Scalar q(1, 4);
    const auto qr = FamilyInstance::q_racah(q, Scalar(1, 5), Scalar(1, 7), 3, 5, 4);
    const auto qrd = contiguity(qr);
    for (int N = 1; N <= 4; ++N)
        for (int k = 0; k < N; ++k)
            CHECK(qrd.mu(k, N) == (Scalar(1) - q.pow(N - k)) * (Scalar(1) - qr.gamma() * q.pow(N + k)));
}

TEST_CASE("contiguity relations hold on the examples") {
    CHECK(check_contiguity(FamilyInstance::dual_hahn(1, 2, 3, 6)).passed());
    CHECK(check_contiguity(FamilyInstance::hahn(1, Scalar(1, 2), 2, 3, 6)).passed());
}

TEST_CASE("contiguity relations hold on random draws") {
    std::mt19937_64 rng(13);
    for (auto kind : kAllFamilies) {
        for (int draw = 0; draw < 5; ++draw) {
            const auto inst = random_instance(kind, rng, 8);
            const auto report = check_contiguity(inst);
            CHECK_MESSAGE(report.passed(), to_string(kind));
            CHECK(report.identities() > 0);
        }
    }
}

TEST_CASE("corrupted alpha2 is caught at the first grid point") {
    const auto inst = FamilyInstance::hahn(1, Scalar(1, 2), 2, 3, 6);
    auto data = contiguity(inst);
    const auto good = data.alpha2;
    data.alpha2 = [good](int n, int N) { return Scalar(2) * good(n, N); };
    const auto report = check_contiguity(inst, data, poly_function(inst));
    CHECK_FALSE(report.passed());
    const Check* fail = report.first_failure();
    REQUIRE(fail != nullptr);
    CHECK(fail->name == "contiguity-relation-1");
    CHECK(witness_index(*fail, "N") == 0);
    CHECK(witness_index(*fail, "n") == 0);
    CHECK(witness_index(*fail, "k") == 0);
    CHECK(fail->witness->lhs != fail->witness->rhs);
}

TEST_CASE("three-term recurrence of the sl2 CG coefficients") {
    const std::vector<Scalar> labels{Scalar(2), Scalar(3), Scalar(5, 2), Scalar(7, 3)};
    for (const auto& l1 : labels) {
        for (const auto& l2 : labels) {
            const auto inst = FamilyInstance::dual_hahn(l1 - Scalar(1), l1, l2, 8);
            CHECK(check_three_term_dual_hahn(inst).passed());
        }
    }
    const auto inst = FamilyInstance::dual_hahn(1, 2, 3, 6);
    const auto bad = check_three_term_dual_hahn(
        inst, [](int k, int N) { return Scalar(N - k + 1) * Scalar(N + k + 5) + Scalar(1); });
    CHECK_FALSE(bad.passed());
    CHECK(bad.first_failure()->witness.has_value());
    CHECK_THROWS_AS(check_three_term_dual_hahn(FamilyInstance::dual_hahn(Scalar(1, 3), 2, 3, 4)), InvalidParameter);
}

TEST_CASE("hahn to krawtchouk limit decays at first order") {
    const std::vector<Scalar> z{Scalar(1000), Scalar(1000000)};
    CHECK(limit_hahn_to_krawtchouk(Scalar(1, 3), z, 1, 1, 2).passed());
    for (int N = 0; N <= 4; ++N)
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= N; ++k) CHECK(limit_hahn_to_krawtchouk(Scalar(1, 3), z, n, k, N).passed());
    // n = 0 and k = 0 rows coincide exactly
    const auto p = Scalar(1, 3);
    for (const auto& zz : z) {
        CHECK(formulas::hahn(p * zz, (Scalar(1) - p) * zz, 0, 2, 3) == formulas::krawtchouk(p, 0, 2, 3));
        CHECK(formulas::hahn(p * zz, (Scalar(1) - p) * zz, 2, 0, 3) == formulas::krawtchouk(p, 2, 0, 3));
    }
    CHECK_THROWS_AS(limit_hahn_to_krawtchouk(p, {Scalar(1000000), Scalar(1000)}, 1, 1, 2), InvalidParameter);
}

TEST_CASE("validation rejects non-generic parameters") {
    const auto msg = message_of([] { (void)FamilyInstance::hahn(1, 1, 2, 3, 8); });
    CHECK(msg.find("genericity restriction") != std::string::npos);
    CHECK_THROWS_AS(FamilyInstance::krawtchouk(0, 2, 3, 4), InvalidParameter);
    CHECK_THROWS_AS(FamilyInstance::krawtchouk(1, 2, 3, 4), InvalidParameter);
    CHECK_THROWS_AS(FamilyInstance::dual_hahn(1, -1, 3, 4), InvalidParameter);
    CHECK_THROWS_AS(FamilyInstance::q_racah(Scalar(1, 4), Scalar(1, 5), Scalar(1, 7), 2, 3, 6), InvalidParameter);
    CHECK_THROWS_AS(FamilyInstance::q_hahn(1, 2, 3, 2, 3, 4), InvalidParameter);
    CHECK_NOTHROW(FamilyInstance::q_racah(Scalar(1, 4), Scalar(1, 5), Scalar(1, 7), 3, 5, 6));
}

TEST_CASE("constrained parameters are derived, never supplied") {
    const auto racah = FamilyInstance::racah(Scalar(1, 3), Scalar(2, 7), Scalar(5, 2), Scalar(7, 3), 4);
    CHECK(racah.gamma() == Scalar(5, 2) + Scalar(7, 3) - Scalar(1));
    const auto qr = FamilyInstance::q_racah(Scalar(1, 4), Scalar(1, 5), Scalar(1, 7), 3, 5, 4);
    CHECK(qr.gamma() == Scalar(9 * 25 * 4));
    ParameterMap p{{"alpha", 1}, {"beta", Scalar(1, 2)}, {"gamma", 3}, {"lambda1", 2}, {"lambda2", 3}};
    CHECK_THROWS_AS(FamilyInstance::from_parameters(FamilyKind::Racah, p, 4), InvalidParameter);
    p.erase("gamma");
    CHECK_NOTHROW(FamilyInstance::from_parameters(FamilyKind::Racah, p, 4));
    p.erase("beta");
    CHECK_THROWS_AS(FamilyInstance::from_parameters(FamilyKind::Racah, p, 4), InvalidParameter);
}

TEST_CASE("family names round-trip") {
    for (auto kind : kAllFamilies) CHECK(parse_family_kind(to_string(kind)) == kind);
    CHECK_THROWS_AS(parse_family_kind("jacobi"), ParseError);
}

TEST_CASE("random draws are reproducible and keep given values") {
    std::mt19937_64 a(99), b(99);
    for (auto kind : kAllFamilies) {
        CHECK(random_instance(kind, a, 5).parameters() == random_instance(kind, b, 5).parameters());
    }
    std::mt19937_64 rng(5);
    const auto params = complete_parameters(FamilyKind::Hahn, {{"alpha", Scalar(1, 3)}}, rng, 6);
    CHECK(params.at("alpha") == Scalar(1, 3));
    CHECK(params.size() == 4);
    std::mt19937_64 rng2(5);
    CHECK_THROWS_AS(complete_parameters(FamilyKind::Hahn, {{"alpha", 1}, {"beta", 1}}, rng2, 6), InvalidParameter);
    std::mt19937_64 rng3(8);
    for (int i = 0; i < 20; ++i) {
        const Scalar q = random_instance(FamilyKind::QRacah, rng3, 3).q();
        Scalar root;
        CHECK(q.rational_sqrt(root));
        CHECK(Scalar(0) < q);
        CHECK(q < Scalar(1));
    }
}
