#include "cgaskey/coproduct.hpp"

#include <array>
#include <map>
#include <string>

#include "cgaskey/errors.hpp"

namespace cgaskey {

TensorModule TensorModule::for_family(const FamilyInstance& inst) {
    const int levels = inst.n_max() + 1;
    return {ModuleSpec{inst.algebra(), inst.label1(), levels}, ModuleSpec{inst.algebra(), inst.label2(), levels},
            inst.n_max()};
}

void TensorModule::validate() const {
    if (!(left.algebra == right.algebra)) throw InvalidParameter("tensor factors belong to different algebras");
    if (left.levels < n_max + 1 || right.levels < n_max + 1) {
        throw InvalidParameter("tensor factors need n_max+1 levels");
    }
    left.validate();
    right.validate();
}

namespace {

void require_matching(const FamilyInstance& inst, const TensorModule& tm) {
    tm.validate();
    if (!(tm.left.algebra == inst.algebra()) || tm.left.label != inst.label1() || tm.right.label != inst.label2()) {
        throw InvalidParameter("tensor module labels do not match the family instance");
    }
    if (tm.n_max > inst.n_max()) throw InvalidParameter("tensor module exceeds the certified n_max");
}

}  // namespace

CoproductCoeffs coproduct_coeffs(const FamilyInstance& inst) {
    const auto data = contiguity(inst);
    const Algebra alg = inst.algebra();
    const Scalar l1 = inst.label1();
    const Scalar l2 = inst.label2();
    CoproductCoeffs c;
    c.x = [data](int n, int m) { return data.alpha1(n, n + m - 1); };
    c.y = [data](int n, int m) { return data.alpha2(n, n + m - 1); };
    c.xp = [data, alg, l1](int n, int m) {
        return checked_div(data.beta1(n, n + m + 1), phi(alg, l1, n + 1), "phi(label1, n+1)");
    };
    c.yp = [data, alg, l2](int n, int m) {
        return checked_div(data.beta2(n, n + m + 1), phi(alg, l2, m + 1), "phi(label2, m+1)");
    };
    return c;
}

CoproductCoeffs algebraic_form(const FamilyInstance& inst) {
    const Scalar l1 = inst.label1();
    const Scalar l2 = inst.label2();
    const Algebra alg = inst.algebra();
    auto H1 = [alg, l1](int n) { return weight_eigenvalue(alg, l1, n); };
    auto H2 = [alg, l2](int m) { return weight_eigenvalue(alg, l2, m); };
    CoproductCoeffs c;
    switch (inst.kind()) {
        case FamilyKind::Hahn: {
            // C = 2EF + H acts as λ on V_λ.
            const Scalar C1 = casimir_eigenvalue(alg, l1);
            const Scalar C2 = casimir_eigenvalue(alg, l2);
            const Scalar ab2 = Scalar(2) * (inst.alpha() + inst.beta()) + Scalar(2);
            const Scalar a2 = Scalar(2) * inst.alpha() + Scalar(2);
            const Scalar b2 = Scalar(2) * inst.beta();
            auto D = [=](int n, int m) { return H1(n) - H2(m) - C1 + C2 + ab2; };
            c.x = [=](int n, int m) { return checked_div(H1(n) - C1 + ab2, D(n, m), "D"); };
            c.y = [=](int n, int m) { return checked_div(C2 - H2(m) + ab2, D(n, m), "D"); };
            c.xp = [=](int n, int m) { return checked_div(H1(n) - C1 + a2, D(n, m), "D"); };
            c.yp = [=](int n, int m) { return checked_div(C2 - H2(m) + b2, D(n, m), "D"); };
            break;
        }
        case FamilyKind::Krawtchouk: {
            const Scalar p = inst.p();
            c.x = [](int, int) { return Scalar(1); };
            c.y = [](int, int) { return Scalar(1); };
            c.xp = [p](int, int) { return p; };
            c.yp = [p](int, int) { return Scalar(1) - p; };
            break;
        }
        case FamilyKind::DualHahn: {
            const Scalar a2 = Scalar(2) * inst.alpha() + Scalar(2);
            const Scalar b2 = Scalar(2) * inst.beta() + Scalar(2);
            c.x = [](int, int) { return Scalar(1); };
            c.y = [](int, int) { return Scalar(1); };
            c.xp = [=](int n, int) { return checked_div(H1(n) - l1 + a2, H1(n) + l1, "H1+lambda1"); };
            c.yp = [=](int, int m) { return checked_div(H2(m) - l2 + b2, H2(m) + l2, "H2+lambda2"); };
            break;
        }
        case FamilyKind::Racah: {
            const Scalar a = inst.alpha();
            const Scalar b = inst.beta();
            const Scalar g = inst.gamma();
            const Scalar ab2 = Scalar(2) * (a + b) + Scalar(2);
            auto D = [=](int n, int m) { return H1(n) - H2(m) - l1 + l2 + ab2; };
            c.x = [=](int n, int m) { return checked_div(H1(n) - l1 + ab2, D(n, m), "D"); };
            // The printed 𝕀⊗(λ₂-H⁽²⁾+2α+2β+2)E is read as a diagonal factor at the target vector.
            c.y = [=](int n, int m) { return checked_div(l2 - H2(m) + ab2, D(n, m), "D"); };
            c.xp = [=](int n, int m) {
                const Scalar num = (H1(n) - l1 + Scalar(2) * a + Scalar(2)) *
                                   (H1(n) - l1 + Scalar(2) * (b + g) + Scalar(2));
                return checked_div(num, (H1(n) + l1) * D(n, m), "(H1+lambda1) D");
            };
            c.yp = [=](int n, int m) {
                const Scalar num = (l2 - H2(m) + Scalar(2) * b) * (H2(m) - l2 - Scalar(2) * a + Scalar(2) * g);
                return checked_div(num, (H2(m) + l2) * D(n, m), "(H2+lambda2) D");
            };
            break;
        }
        case FamilyKind::QHahn: {
            // C = (1-EF)K⁻¹ acts as κ⁻¹, so C⁽ⁱ⁾K⁽ⁱ⁾ acts as q^n.
            const Scalar q = inst.q();
            const Scalar a = inst.alpha();
            const Scalar b = inst.beta();
            const Scalar C1 = casimir_eigenvalue(alg, l1);
            const Scalar C2 = casimir_eigenvalue(alg, l2);
            auto CK1 = [=](int n) { return C1 * H1(n); };
            auto CK2 = [=](int m) { return C2 * H2(m); };
            auto D = [=](int n, int m) { return Scalar(1) - q * a * b * CK1(n) / CK2(m); };
            c.x = [=](int n, int m) { return checked_div(Scalar(1) - q * a * b * CK1(n), D(n, m), "D"); };
            c.y = [=](int n, int m) {
                return checked_div(CK1(n) * (Scalar(1) - q * a * b / CK2(m)), D(n, m), "D");
            };
            c.xp = [=](int n, int m) { return checked_div(Scalar(1) - q * a * CK1(n), D(n, m), "D"); };
            c.yp = [=](int n, int m) {
                return checked_div(q * a * CK1(n) * (Scalar(1) - b / CK2(m)), D(n, m), "D");
            };
            break;
        }
        case FamilyKind::QRacah: {
            // q^{λ/2} = κ; q^{-λ₁/2}K⁽¹⁾ acts as q^n.
            const Scalar q = inst.q();
            const Scalar a = inst.alpha();
            const Scalar b = inst.beta();
            const Scalar g = inst.gamma();
            const Scalar k1 = l1;
            const Scalar k2 = l2;
            auto D = [=](int n, int m) { return Scalar(1) - q * k2 / k1 * a * b * H1(n) / H2(m); };
            c.x = [=](int n, int m) { return checked_div(Scalar(1) - a * b * q / k1 * H1(n), D(n, m), "D"); };
            c.y = [=](int n, int m) {
                return checked_div(H1(n) / k1 * (Scalar(1) - a * b * q * k2 / H2(m)), D(n, m), "D");
            };
            c.xp = [=](int n, int m) {
                const Scalar num = (Scalar(1) - q / k1 * a * H1(n)) * (Scalar(1) - q / k1 * b * g * H1(n));
                return checked_div(num, (Scalar(1) - k1 * H1(n)) * D(n, m), "(1-q^(l1/2)K1) D");
            };
            c.yp = [=](int n, int m) {
                // α(1 - q^{-λ₂/2}γK⁽²⁾/α) expanded to α - γK⁽²⁾/κ₂ so α = 0 stays finite.
                const Scalar num = q / k1 * H1(n) * (Scalar(1) - k2 * b / H2(m)) * (a - g * H2(m) / k2);
                return checked_div(num, (Scalar(1) - k2 * H2(m)) * D(n, m), "(1-q^(l2/2)K2) D");
            };
            break;
        }
    }
    return c;
}

Delta build_delta(const FamilyInstance& inst, const TensorModule& tm) {
    require_matching(inst, tm);
    return build_delta(coproduct_coeffs(inst), tm);
}

Delta build_delta(const CoproductCoeffs& coeffs, const TensorModule& tm) {
    const auto space = tm.space();
    const Algebra& alg = tm.left.algebra;
    Delta d{GradedOperator(space, 1), GradedOperator(space, -1), GradedOperator(space, 0)};
    for (int N = 0; N <= tm.n_max; ++N) {
        for (int n = 0; n <= N; ++n) {
            const int m = N - n;
            const auto col = static_cast<std::size_t>(n);
            if (d.dE.has_block(N)) {
                d.dE.block(N)(col + 1, col) += coeffs.x(n + 1, m);
                d.dE.block(N)(col, col) += coeffs.y(n, m + 1);
            }
            if (N >= 1) {
                if (n > 0) d.dF.block(N)(col - 1, col) += coeffs.xp(n - 1, m) * phi(alg, tm.left.label, n);
                if (m > 0) d.dF.block(N)(col, col) += coeffs.yp(n, m - 1) * phi(alg, tm.right.label, m);
            }
            const Scalar w1 = weight_eigenvalue(alg, tm.left.label, n);
            const Scalar w2 = weight_eigenvalue(alg, tm.right.label, m);
            d.dHK.block(N)(col, col) = alg.is_q() ? w1 * w2 : w1 + w2;
        }
    }
    return d;
}

Report check_homomorphism(const FamilyInstance& inst, const TensorModule& tm) {
    const auto delta = build_delta(inst, tm);
    return check_homomorphism(inst.algebra(), delta);
}

Report check_homomorphism(const Algebra& algebra, const Delta& delta) {
    auto report = check_algebra_relations(algebra, Generators{delta.dE, delta.dF, delta.dHK});
    report.name = "homomorphism";
    return report;
}

Report check_algebraic_form(const FamilyInstance& inst, const TensorModule& tm) {
    return check_algebraic_form(inst, tm, algebraic_form(inst));
}

Report check_algebraic_form(const FamilyInstance& inst, const TensorModule& tm, const CoproductCoeffs& alg) {
    require_matching(inst, tm);
    const auto data = contiguity(inst);
    const Algebra& algebra = inst.algebra();
    const int n_max = tm.n_max;

    CheckRecorder raising("algebraic-form-E", "n+m=N+1, 0<=N<" + std::to_string(n_max));
    for (int N = 0; N < n_max; ++N) {
        for (int n = 0; n <= N + 1; ++n) {
            const int m = N + 1 - n;
            raising.expect_equal(alg.x(n, m), data.alpha1(n, N), {{"N", N}, {"n", n}, {"m", m}}, "x vs alpha1");
            raising.expect_equal(alg.y(n, m), data.alpha2(n, N), {{"N", N}, {"n", n}, {"m", m}}, "y vs alpha2");
        }
    }
    CheckRecorder lowering("algebraic-form-F", "n+m=N-1, 1<=N<=" + std::to_string(n_max));
    for (int N = 1; N <= n_max; ++N) {
        for (int n = 0; n <= N - 1; ++n) {
            const int m = N - 1 - n;
            lowering.expect_equal(alg.xp(n, m) * phi(algebra, inst.label1(), n + 1), data.beta1(n, N),
                                  {{"N", N}, {"n", n}, {"m", m}}, "x' phi(l1,n+1) vs beta1");
            lowering.expect_equal(alg.yp(n, m) * phi(algebra, inst.label2(), m + 1), data.beta2(n, N),
                                  {{"N", N}, {"n", n}, {"m", m}}, "y' phi(l2,m+1) vs beta2");
        }
    }
    return {"algebraic-form", {raising.finish(), lowering.finish()}};
}

GradedOperator tensor_product(const GradedOperator& a, const GradedOperator& b, int n_max) {
    const auto space = GradedSpace::tensor(n_max);
    const int da = a.degree();
    const int db = b.degree();
    auto coeff = [](const GradedOperator& op, int level) -> Scalar {
        if (!op.has_block(level)) throw InvalidParameter("tensor_product: factor truncated below n_max");
        const Matrix& blk = op.block(level);
        return blk.rows() == 0 ? Scalar(0) : blk(0, 0);
    };
    GradedOperator out(space, da + db);
    for (int N : out.levels()) {
        const int target = N + da + db;
        for (int n = 0; n <= N; ++n) {
            const int m = N - n;
            const int tn = n + da;
            const int tm = m + db;
            if (tn < 0 || tm < 0 || target < 0) continue;
            out.block(N)(static_cast<std::size_t>(tn), static_cast<std::size_t>(n)) += coeff(a, n) * coeff(b, m);
        }
    }
    return out;
}

Report check_twist_qracah_specialization(const Scalar& q, const Scalar& kappa1, const Scalar& kappa2, int n_max) {
    const Scalar alpha = kappa1 * kappa1 / q;
    const auto inst = FamilyInstance::q_racah(q, alpha, Scalar(0), kappa1, kappa2, n_max);
    return check_twist_qracah_specialization(inst, build_delta(inst, TensorModule::for_family(inst)));
}

Report check_twist_qracah_specialization(const FamilyInstance& inst, const Delta& delta) {
    const Scalar q = inst.q();
    const Scalar kappa1 = inst.label1();
    const int n_max = inst.n_max();
    if (inst.kind() != FamilyKind::QRacah || !inst.beta().is_zero() || inst.alpha() != kappa1 * kappa1 / q) {
        throw InvalidParameter("twist check needs q-racah with beta = 0 and alpha = kappa1^2/q");
    }
    const auto tm = TensorModule::for_family(inst);

    const auto g1 = build_generators(tm.left);
    const auto g2 = build_generators(tm.right);
    const auto id2 = GradedOperator::identity(g2.E.space());
    const auto EI = tensor_product(g1.E, id2, n_max);
    const auto FI = tensor_product(g1.F, id2, n_max);
    const auto KE = tensor_product(g1.HK, g2.E, n_max);
    const auto KF = tensor_product(g1.HK, g2.F, n_max);

    Report report{"twist", {}};
    auto a_e = compare_operators("specialized dE = E(x)1 + kappa1^-1 K(x)E", delta.dE, EI + kappa1.inverse() * KE);
    auto a_f = compare_operators("specialized dF = F(x)1 + kappa1 K(x)F", delta.dF, FI + kappa1 * KF);
    report.checks.push_back(a_e);
    report.checks.push_back(a_f);

    // 𝕀⊗K^{λ₁/2} up to a global constant: eigenvalue κ₁^m on (n,m).
    std::vector<Vector> twist_diag;
    for (int N = 0; N <= n_max; ++N) {
        Vector v;
        for (int n = 0; n <= N; ++n) v.push_back(kappa1.pow(N - n));
        twist_diag.push_back(std::move(v));
    }
    const auto T = GradedOperator::diagonal(tm.space(), twist_diag);
    const auto Tinv = T.inverse_diagonal();
    const auto tE = T * delta.dE * Tinv;
    const auto tF = T * delta.dF * Tinv;
    report.checks.push_back(compare_operators("twisted dE = E(x)1 + K(x)E", tE, EI + KE));
    report.checks.push_back(compare_operators("twisted dF = F(x)1 + K(x)F", tF, FI + KF));
    auto rel = check_algebra_relations(inst.algebra(), Generators{tE, tF, delta.dHK});
    for (auto& c : rel.checks) {
        c.name = "twisted " + c.name;
        report.checks.push_back(c);
    }
    return report;
}

Report check_standard_sl2_specialization(const Scalar& lambda1, const Scalar& lambda2, int n_max) {
    return check_standard_sl2_specialization(
        coproduct_coeffs(FamilyInstance::dual_hahn(lambda1 - Scalar(1), lambda1, lambda2, n_max)), n_max);
}

Report check_standard_sl2_specialization(const CoproductCoeffs& c, int n_max) {
    CheckRecorder rec("standard-sl2-coproduct", "x,y at n+m<=" + std::to_string(n_max) + "; x',y' at n+m<=" +
                                                    std::to_string(n_max - 1));
    for (int s = 0; s <= n_max; ++s) {
        for (int n = 0; n <= s; ++n) {
            const int m = s - n;
            if (s >= 1) {
                rec.expect_equal(c.x(n, m), Scalar(1), {{"n", n}, {"m", m}}, "x");
                rec.expect_equal(c.y(n, m), Scalar(1), {{"n", n}, {"m", m}}, "y");
            }
            if (s <= n_max - 1) {
                rec.expect_equal(c.xp(n, m), Scalar(1), {{"n", n}, {"m", m}}, "x'");
                rec.expect_equal(c.yp(n, m), Scalar(1), {{"n", n}, {"m", m}}, "y'");
            }
        }
    }
    return {"standard-sl2", {rec.finish()}};
}

Report limit_racah_to_dual_hahn(const Scalar& alpha, const Scalar& lambda1, const Scalar& lambda2,
                                const std::vector<Scalar>& betas, int n_max) {
    if (betas.size() < 2) throw InvalidParameter("limit check needs at least two beta values");
    std::vector<CoproductCoeffs> racah;
    for (const auto& b : betas) racah.push_back(coproduct_coeffs(FamilyInstance::racah(alpha, b, lambda1, lambda2, n_max)));
    return limit_racah_to_dual_hahn(coproduct_coeffs(FamilyInstance::dual_hahn(alpha, lambda1, lambda2, n_max)), racah,
                                    betas, n_max);
}

Report limit_racah_to_dual_hahn(const CoproductCoeffs& dh, const std::vector<CoproductCoeffs>& racah,
                                const std::vector<Scalar>& betas, int n_max) {
    if (betas.size() < 2 || racah.size() != betas.size()) {
        throw InvalidParameter("limit check needs one coefficient set per beta, at least two");
    }

    CheckRecorder rec("racah-dual-hahn-coefficient-decay", std::to_string(betas.size()) + " beta values, n+m<=" +
                                                               std::to_string(n_max));
    static const char* const kNames[] = {"x", "y", "x'", "y'"};
    auto pick = [](const CoproductCoeffs& c, int which, int n, int m) {
        switch (which) {
            case 0: return c.x(n, m);
            case 1: return c.y(n, m);
            case 2: return c.xp(n, m);
            default: return c.yp(n, m);
        }
    };
    for (int s = 0; s <= n_max; ++s) {
        for (int n = 0; n <= s; ++n) {
            const int m = s - n;
            for (int which = 0; which < 4; ++which) {
                if (which < 2 && s < 1) continue;
                if (which >= 2 && s > n_max - 1) continue;
                const Scalar target = pick(dh, which, n, m);
                for (std::size_t i = 1; i < betas.size(); ++i) {
                    const Scalar d0 = (pick(racah[i - 1], which, n, m) - target).abs();
                    const Scalar d1 = (pick(racah[i], which, n, m) - target).abs();
                    const Scalar bound = Scalar(2) * betas[i - 1] / betas[i] * d0;
                    rec.expect(d1 <= bound, {{"n", n}, {"m", m}, {"beta_index", static_cast<long>(i)}}, d1.str(),
                               bound.str(), kNames[which]);
                }
            }
        }
    }
    return {"limit-racah-dual-hahn", {rec.finish()}};
}

// ---------------------------------------------------------------------------
// Coassociativity on the triple tensor product

namespace {

/// One summand c·X acting on tensor factor `slot`.
struct SlotTerm {
    Scalar coeff;
    int slot;
};

/// Δ_p of a generator as a list of slot terms on two factors.
std::vector<SlotTerm> krawtchouk_delta(bool is_f, const Scalar& p) {
    if (!is_f) return {{Scalar(1), 0}, {Scalar(1), 1}};
    return {{p, 0}, {Scalar(1) - p, 1}};
}

/// Applies Δ to the factor at `split` and shifts the later factors right by one.
std::vector<SlotTerm> apply_delta_at(const std::vector<SlotTerm>& terms, int split, bool is_f, const Scalar& p) {
    std::vector<SlotTerm> out;
    for (const auto& t : terms) {
        if (t.slot < split) {
            out.push_back(t);
        } else if (t.slot == split) {
            for (const auto& s : krawtchouk_delta(is_f, p)) out.push_back({t.coeff * s.coeff, split + s.slot});
        } else {
            out.push_back({t.coeff, t.slot + 1});
        }
    }
    return out;
}

class TripleBasis {
public:
    explicit TripleBasis(int n_max) {
        for (int N = 0; N <= n_max; ++N) {
            std::map<std::array<int, 3>, std::size_t> level;
            std::size_t idx = 0;
            for (int a = 0; a <= N; ++a) {
                for (int b = 0; b <= N - a; ++b) level[{a, b, N - a - b}] = idx++;
            }
            index_.push_back(std::move(level));
        }
    }
    [[nodiscard]] const std::map<std::array<int, 3>, std::size_t>& level(int N) const {
        return index_[static_cast<std::size_t>(N)];
    }

private:
    std::vector<std::map<std::array<int, 3>, std::size_t>> index_;
};

GradedOperator realize(const std::vector<SlotTerm>& terms, bool is_f, const std::vector<Scalar>& labels, int n_max) {
    const auto space = GradedSpace::triple(n_max);
    const TripleBasis basis(n_max);
    const Algebra osc = Algebra::osc();
    GradedOperator out(space, is_f ? -1 : 1);
    for (int N : out.levels()) {
        const int target = N + out.degree();
        if (target < 0) continue;
        for (const auto& [abc, col] : basis.level(N)) {
            for (const auto& t : terms) {
                auto shifted = abc;
                shifted[static_cast<std::size_t>(t.slot)] += is_f ? -1 : 1;
                if (shifted[static_cast<std::size_t>(t.slot)] < 0) continue;
                const Scalar factor =
                    is_f ? phi(osc, labels[static_cast<std::size_t>(t.slot)], abc[static_cast<std::size_t>(t.slot)])
                         : Scalar(1);
                const std::size_t row = basis.level(target).at(shifted);
                out.block(N)(row, col) += t.coeff * factor;
            }
        }
    }
    return out;
}

bool in_unit_interval(const Scalar& x) {
    return Scalar(0) < x && x < Scalar(1);
}

}  // namespace

CoassocResult krawtchouk_coassoc(const KrawtchoukQuad& quad, const std::vector<Scalar>& labels, int n_max) {
    for (const auto* x : {&quad.p, &quad.q, &quad.p2, &quad.q2}) {
        if (!in_unit_interval(*x)) {
            throw InvalidParameter("coassociativity parameters must lie in (0,1); got " + x->str());
        }
    }
    if (labels.size() != 3) throw InvalidParameter("coassociativity check needs three module labels");
    if (n_max < 0) throw InvalidParameter("n_max must be non-negative");

    CoassocResult result;
    result.constraint_holds =
        quad.p2 == quad.p * quad.q && Scalar(1) - quad.p == (Scalar(1) - quad.p2) * (Scalar(1) - quad.q2);

    bool all_equal = true;
    std::vector<Check> checks;
    for (bool is_f : {false, true}) {
        // (Δ_q ⊗ Id) ∘ Δ_p  versus  (Id ⊗ Δ_{q2}) ∘ Δ_{p2}
        const auto left = apply_delta_at(krawtchouk_delta(is_f, quad.p), 0, is_f, quad.q);
        const auto right = apply_delta_at(krawtchouk_delta(is_f, quad.p2), 1, is_f, quad.q2);
        const auto lop = realize(left, is_f, labels, n_max);
        const auto rop = realize(right, is_f, labels, n_max);
        auto check = compare_operators(is_f ? "coassociativity F" : "coassociativity E", lop, rop);
        all_equal = all_equal && check.passed();
        checks.push_back(std::move(check));
    }
    result.lhs_equals_rhs = all_equal;

    CheckRecorder implication("constraint implies equality", "triple tensor, N<=" + std::to_string(n_max));
    implication.expect(!result.constraint_holds || result.lhs_equals_rhs, {{"n_max", n_max}},
                       result.constraint_holds ? "constraint holds" : "constraint fails",
                       result.lhs_equals_rhs ? "equal" : "different");
    result.report.name = "coassociativity";
    // The operator comparisons are informative: inequality is the expected outcome off the constraint.
    for (auto& c : checks) {
        if (!c.passed() && !result.constraint_holds) {
            c.status = CheckStatus::Skipped;
            c.note = "operators differ (expected: constraint does not hold)";
        }
        result.report.checks.push_back(std::move(c));
    }
    result.report.checks.push_back(implication.finish());
    return result;
}

}  // namespace cgaskey
