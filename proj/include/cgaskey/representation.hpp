#pragma once

#include <string>

#include "cgaskey/algebra.hpp"
#include "cgaskey/graded_operator.hpp"
#include "cgaskey/report.hpp"

namespace cgaskey {

/// A lowest-weight module truncated to the basis |λ,0⟩ … |λ,levels⟩.
/// `label` is λ for the classical algebras and κ = q^{λ/2} for the q-algebras.
struct ModuleSpec {
    Algebra algebra;
    Scalar label;
    int levels = 0;

    /// Throws InvalidParameter if φ(label, n) vanishes for some 1 <= n <= levels.
    void validate() const;
};

/// E (degree +1, all coefficients 1), F (degree -1, coefficients φ) and the
/// Cartan generator: H = diag(λ+2n) classically, K = diag(κq^n) for the q-algebras.
struct Generators {
    GradedOperator E;
    GradedOperator F;
    GradedOperator HK;
};

Generators build_generators(const ModuleSpec& module);

/// Defining relations, block-wise, on the sub-grid where all compositions stay
/// inside the truncation:
///   osc:    [H,E]=2E, [H,F]=-2F, [E,F]=1
///   sl2:    [H,E]=2E, [H,F]=-2F, [E,F]=H
///   osc_q:  KE=qEK, qKF=FK, qEF-FE=q-1
///   U_q:    KE=qEK, qKF=FK, qEF-FE=(q-1)(1-K²), plus the standard form with
///           F̃ = -q^{1/2}(q-1)^{-2}K^{-1}F when q^{1/2} is rational (skipped otherwise).
Report check_relations(const ModuleSpec& module);
Report check_relations(const ModuleSpec& module, const Generators& gens);

/// The same relations for any triple of operators on a graded space, e.g. the
/// images of E, F, H/K under a coproduct.
Report check_algebra_relations(const Algebra& algebra, const Generators& gens);

/// Compares two operators of equal degree entry-wise on every level where both have blocks.
Check compare_operators(std::string name, const GradedOperator& lhs, const GradedOperator& rhs);

struct CasimirResult {
    GradedOperator op;
    Scalar eigenvalue;
    bool ok = false;
};

/// Builds the Casimir element (osc: 2EF+H, sl2: 4EF+H²-2H, osc_q: (1-EF)K⁻¹,
/// U_q: EFK⁻¹-q⁻¹K-K⁻¹) and tests that it is eigenvalue·Id on every level.
CasimirResult casimir(const ModuleSpec& module);
CasimirResult casimir(const ModuleSpec& module, const Generators& gens);

/// Expected Casimir eigenvalue: λ, λ(λ-2), κ⁻¹, -(κ/q + 1/κ).
Scalar casimir_eigenvalue(const Algebra& algebra, const Scalar& label);

/// Casimir commutes with E and F wherever the compositions are defined.
Report check_casimir_central(const ModuleSpec& module);

}  // namespace cgaskey
