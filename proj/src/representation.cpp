#include "cgaskey/representation.hpp"

#include <string>

#include "cgaskey/errors.hpp"

namespace cgaskey {

Check compare_operators(std::string name, const GradedOperator& lhs, const GradedOperator& rhs) {
    int lo = -1;
    int hi = -1;
    for (int N : lhs.levels()) {
        if (!rhs.has_block(N)) continue;
        if (lo < 0) lo = N;
        hi = N;
    }
    CheckRecorder rec(std::move(name), lo < 0 ? "empty" : "levels " + std::to_string(lo) + ".." + std::to_string(hi));
    for (int N : lhs.levels()) {
        if (!rhs.has_block(N)) continue;
        const Matrix& a = lhs.block(N);
        const Matrix& b = rhs.block(N);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                rec.expect_equal(a(i, j), b(i, j),
                                 {{"level", N}, {"row", static_cast<long>(i)}, {"col", static_cast<long>(j)}});
            }
        }
    }
    return rec.finish();
}

namespace {

Check compare(std::string name, const GradedOperator& lhs, const GradedOperator& rhs) {
    return compare_operators(std::move(name), lhs, rhs);
}

}  // namespace

void ModuleSpec::validate() const {
    if (levels < 0) throw InvalidParameter("module levels must be non-negative");
    if (algebra.is_q() && label.is_zero()) throw InvalidParameter("kappa label must be nonzero");
    for (int n = 1; n <= levels; ++n) {
        if (phi(algebra, label, n).is_zero()) {
            throw InvalidParameter("module label " + label.str() + " is degenerate: phi vanishes at level " +
                                   std::to_string(n));
        }
    }
}

Generators build_generators(const ModuleSpec& module) {
    module.validate();
    const auto space = GradedSpace::single(module.levels);
    Generators g{GradedOperator(space, 1), GradedOperator(space, -1), GradedOperator(space, 0)};
    for (int n = 0; n <= module.levels; ++n) {
        if (g.E.has_block(n)) g.E.block(n)(0, 0) = 1;
        if (n >= 1) g.F.block(n)(0, 0) = phi(module.algebra, module.label, n);
        g.HK.block(n)(0, 0) = weight_eigenvalue(module.algebra, module.label, n);
    }
    return g;
}

Report check_relations(const ModuleSpec& module) {
    return check_relations(module, build_generators(module));
}

Report check_relations(const ModuleSpec& module, const Generators& gens) {
    return check_algebra_relations(module.algebra, gens);
}

Report check_algebra_relations(const Algebra& algebra, const Generators& gens) {
    const auto& [E, F, HK] = gens;
    const auto id = GradedOperator::identity(E.space());
    Report report{"relations", {}};
    switch (algebra.kind) {
        case AlgebraKind::Osc:
        case AlgebraKind::Sl2: {
            report.checks.push_back(compare("[H,E]=2E", commutator(HK, E), Scalar(2) * E));
            report.checks.push_back(compare("[H,F]=-2F", commutator(HK, F), Scalar(-2) * F));
            if (algebra.kind == AlgebraKind::Osc) {
                report.checks.push_back(compare("[E,F]=1", commutator(E, F), id));
            } else {
                report.checks.push_back(compare("[E,F]=H", commutator(E, F), HK));
            }
            break;
        }
        case AlgebraKind::OscQ:
        case AlgebraKind::UqSl2: {
            const Scalar& q = algebra.deformation();
            report.checks.push_back(compare("KE=qEK", HK * E, q * (E * HK)));
            report.checks.push_back(compare("qKF=FK", q * (HK * F), F * HK));
            const auto lhs = q * (E * F) - F * E;
            if (algebra.kind == AlgebraKind::OscQ) {
                report.checks.push_back(compare("qEF-FE=q-1", lhs, (q - Scalar(1)) * id));
                break;
            }
            report.checks.push_back(compare("qEF-FE=(q-1)(1-K^2)", lhs, (q - Scalar(1)) * (id - HK * HK)));
            Scalar root;
            if (!q.rational_sqrt(root)) {
                report.checks.push_back(skipped_check("standard-form", "q^(1/2) is not rational for q=" + q.str()));
                break;
            }
            const auto Kinv = HK.inverse_diagonal();
            const Scalar c = -root / ((q - Scalar(1)) * (q - Scalar(1)));
            const auto Ft = c * (Kinv * F);
            report.checks.push_back(compare("qKFt=FtK", q * (HK * Ft), Ft * HK));
            report.checks.push_back(compare("[E,Ft]=(K-K^-1)/(q^1/2-q^-1/2)", commutator(E, Ft),
                                            (root - root.inverse()).inverse() * (HK - Kinv)));
            break;
        }
    }
    return report;
}

Scalar casimir_eigenvalue(const Algebra& algebra, const Scalar& label) {
    switch (algebra.kind) {
        case AlgebraKind::Osc: return label;
        case AlgebraKind::Sl2: return label * (label - Scalar(2));
        case AlgebraKind::OscQ: return label.inverse();
        case AlgebraKind::UqSl2: return -(label / algebra.deformation() + label.inverse());
    }
    return 0;
}

CasimirResult casimir(const ModuleSpec& module) {
    return casimir(module, build_generators(module));
}

CasimirResult casimir(const ModuleSpec& module, const Generators& gens) {
    const auto& [E, F, HK] = gens;
    const auto id = GradedOperator::identity(E.space());
    GradedOperator C;
    switch (module.algebra.kind) {
        case AlgebraKind::Osc: C = Scalar(2) * (E * F) + HK; break;
        case AlgebraKind::Sl2: C = Scalar(4) * (E * F) + HK * HK - Scalar(2) * HK; break;
        case AlgebraKind::OscQ: C = (id - E * F) * HK.inverse_diagonal(); break;
        case AlgebraKind::UqSl2: {
            const auto Kinv = HK.inverse_diagonal();
            C = (E * F) * Kinv - module.algebra.deformation().inverse() * HK - Kinv;
            break;
        }
    }
    CasimirResult out{C, casimir_eigenvalue(module.algebra, module.label), false};
    out.ok = C == out.eigenvalue * id;
    return out;
}

Report check_casimir_central(const ModuleSpec& module) {
    const auto gens = build_generators(module);
    const auto C = casimir(module, gens).op;
    const GradedOperator zeroE(gens.E.space(), 1);
    const GradedOperator zeroF(gens.F.space(), -1);
    return {"casimir-central",
            {compare("[C,E]=0", commutator(C, gens.E), zeroE), compare("[C,F]=0", commutator(C, gens.F), zeroF)}};
}

}  // namespace cgaskey
