#pragma once

#include <functional>
#include <vector>

#include "cgaskey/family.hpp"
#include "cgaskey/graded_operator.hpp"
#include "cgaskey/report.hpp"
#include "cgaskey/representation.hpp"

namespace cgaskey {

/// V_{λ₁} ⊗ V_{λ₂} truncated at total level n_max; level N has basis (n, N-n).
struct TensorModule {
    ModuleSpec left;
    ModuleSpec right;
    int n_max = 0;

    /// Factor modules carry n_max+1 levels so that every tensor block has its E image.
    static TensorModule for_family(const FamilyInstance& inst);
    [[nodiscard]] GradedSpace space() const { return GradedSpace::tensor(n_max); }
    /// Throws InvalidParameter on mismatched algebras or too few factor levels.
    void validate() const;
};

/// Diagonal coefficients of Δ(E) = x(E⊗𝕀) + y(𝕀⊗E) and Δ(F) = x′(F⊗𝕀) + y′(𝕀⊗F),
/// as eigenvalues on |λ₁,n⟩⊗|λ₂,m⟩. The diagonal factor is evaluated at the
/// vector the shift lands on.
struct CoproductCoeffs {
    std::function<Scalar(int n, int m)> x;
    std::function<Scalar(int n, int m)> y;
    std::function<Scalar(int n, int m)> xp;
    std::function<Scalar(int n, int m)> yp;
};

/// Coefficients read off the contiguity relations:
///   x(n, N+1-n) = α₁(n,N),  y(n, N+1-n) = α₂(n,N),
///   x′(n, N-1-n) = β₁(n,N)/φ(λ₁,n+1),  y′(n, N-1-n) = β₂(n,N)/φ(λ₂,N-n).
CoproductCoeffs coproduct_coeffs(const FamilyInstance& inst);

/// The closed algebraic Δ formulas, evaluated through the eigenvalues of
/// H⁽ⁱ⁾ or K⁽ⁱ⁾ and C⁽ⁱ⁾ on each basis vector. Independent of the contiguity data.
CoproductCoeffs algebraic_form(const FamilyInstance& inst);

struct Delta {
    GradedOperator dE;
    GradedOperator dF;
    GradedOperator dHK;
};

Delta build_delta(const FamilyInstance& inst, const TensorModule& tm);
Delta build_delta(const CoproductCoeffs& coeffs, const TensorModule& tm);

/// Δ(E), Δ(F), Δ(H)/Δ(K) satisfy the algebra relations on every block where
/// the compositions stay inside the truncation.
Report check_homomorphism(const FamilyInstance& inst, const TensorModule& tm);
Report check_homomorphism(const Algebra& algebra, const Delta& delta);

/// Algebraic Δ formulas against the contiguity coefficients on the whole grid:
/// x = α₁, y = α₂ at n+m = N+1 (0 <= N < n_max), x′φ(λ₁,n+1) = β₁ and
/// y′φ(λ₂,m+1) = β₂ at n+m = N-1 (1 <= N <= n_max).
Report check_algebraic_form(const FamilyInstance& inst, const TensorModule& tm);
/// Same comparison with the closed-form side supplied by the caller.
Report check_algebraic_form(const FamilyInstance& inst, const TensorModule& tm, const CoproductCoeffs& formula);

/// Tensor product a⊗b of two operators on truncated single modules, restricted to
/// total levels <= n_max. Both factor spaces need at least n_max+1 levels when
/// either degree is positive.
GradedOperator tensor_product(const GradedOperator& a, const GradedOperator& b, int n_max);

/// q-Racah at β=0, α=κ₁²/q: (a) Δ(E) = E⊗𝕀 + κ₁⁻¹K⊗E and Δ(F) = F⊗𝕀 + κ₁K⊗F;
/// (b) conjugation by the twist diag(κ₁^m) gives E⊗𝕀 + K⊗E and F⊗𝕀 + K⊗F,
/// which again satisfy the U_q(sl2) relations.
Report check_twist_qracah_specialization(const Scalar& q, const Scalar& kappa1, const Scalar& kappa2, int n_max);
/// The twist checks for a given Δ of a q-Racah instance with β=0, α=κ₁²/q.
Report check_twist_qracah_specialization(const FamilyInstance& inst, const Delta& delta);

/// Dual Hahn at α = λ₁-1 gives x = y = x′ = y′ = 1 on the grid.
Report check_standard_sl2_specialization(const Scalar& lambda1, const Scalar& lambda2, int n_max);
Report check_standard_sl2_specialization(const CoproductCoeffs& coeffs, int n_max);

/// Racah(α, β, λ₁, λ₂) coefficients approach DualHahn(α, λ₁, λ₂) ones at first
/// order in β: for consecutive β values |c(β₂)-c_dH| <= 2(β₁/β₂)|c(β₁)-c_dH|.
Report limit_racah_to_dual_hahn(const Scalar& alpha, const Scalar& lambda1, const Scalar& lambda2,
                                const std::vector<Scalar>& betas, int n_max);
/// The decay bound for explicit coefficient sets; `sequence[i]` belongs to `betas[i]`.
Report limit_racah_to_dual_hahn(const CoproductCoeffs& target, const std::vector<CoproductCoeffs>& sequence,
                                const std::vector<Scalar>& betas, int n_max);

struct KrawtchoukQuad {
    Scalar p, q, p2, q2;
};

struct CoassocResult {
    bool lhs_equals_rhs = false;
    bool constraint_holds = false;
    Report report;
};

/// Compares (Δ_q⊗Id)∘Δ_p with (Id⊗Δ_{q2})∘Δ_{p2} on the truncated triple tensor product of
/// osc modules, where Δ_p(E) = E⊗𝕀 + 𝕀⊗E and Δ_p(F) = pF⊗𝕀 + (1-p)𝕀⊗F. The constraint is
/// p2 = pq and 1-p = (1-p2)(1-q2). All four parameters must lie in (0,1).
CoassocResult krawtchouk_coassoc(const KrawtchoukQuad& quad, const std::vector<Scalar>& labels, int n_max);

}  // namespace cgaskey
