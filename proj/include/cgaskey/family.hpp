#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cgaskey/algebra.hpp"
#include "cgaskey/report.hpp"
#include "cgaskey/scalar.hpp"

namespace cgaskey {

enum class FamilyKind { Hahn, Krawtchouk, DualHahn, Racah, QHahn, QRacah };

inline constexpr FamilyKind kAllFamilies[] = {FamilyKind::Hahn,   FamilyKind::Krawtchouk, FamilyKind::DualHahn,
                                              FamilyKind::Racah,  FamilyKind::QHahn,      FamilyKind::QRacah};

/// "hahn", "krawtchouk", "dual-hahn", "racah", "q-hahn", "q-racah".
std::string_view to_string(FamilyKind kind);
/// Throws ParseError for unknown names.
FamilyKind parse_family_kind(std::string_view name);
bool is_q_family(FamilyKind kind);

/// Parameter name -> value. Keys: alpha, beta, gamma, p, q, lambda1, lambda2, kappa1, kappa2.
using ParameterMap = std::map<std::string, Scalar>;

/// Names of the parameters a user supplies for a family (constrained ones excluded).
std::vector<std::string> free_parameters(FamilyKind kind);

/// A polynomial family with every parameter resolved and certified on the grid
/// 0 <= n, k, N <= n_max. Module labels are λ₁, λ₂ for the classical families and
/// κᵢ = q^{λᵢ/2} for the q-families. Construction validates eagerly and throws
/// InvalidParameter with a message naming the violated condition.
class FamilyInstance {
public:
    static FamilyInstance hahn(const Scalar& alpha, const Scalar& beta, const Scalar& lambda1, const Scalar& lambda2,
                               int n_max);
    static FamilyInstance krawtchouk(const Scalar& p, const Scalar& lambda1, const Scalar& lambda2, int n_max);
    /// β = λ₁ + λ₂ - 2 - α.
    static FamilyInstance dual_hahn(const Scalar& alpha, const Scalar& lambda1, const Scalar& lambda2, int n_max);
    /// γ = λ₁ + λ₂ - 1.
    static FamilyInstance racah(const Scalar& alpha, const Scalar& beta, const Scalar& lambda1,
                                const Scalar& lambda2, int n_max);
    static FamilyInstance q_hahn(const Scalar& q, const Scalar& alpha, const Scalar& beta, const Scalar& kappa1,
                                 const Scalar& kappa2, int n_max);
    /// γ = κ₁²κ₂²/q.
    static FamilyInstance q_racah(const Scalar& q, const Scalar& alpha, const Scalar& beta, const Scalar& kappa1,
                                  const Scalar& kappa2, int n_max);

    /// Builds from named free parameters; extra constrained keys are rejected.
    static FamilyInstance from_parameters(FamilyKind kind, const ParameterMap& params, int n_max);

    [[nodiscard]] FamilyKind kind() const { return kind_; }
    [[nodiscard]] int n_max() const { return n_max_; }
    [[nodiscard]] const Algebra& algebra() const { return algebra_; }

    [[nodiscard]] const Scalar& alpha() const;
    [[nodiscard]] const Scalar& beta() const;
    [[nodiscard]] const Scalar& gamma() const;
    [[nodiscard]] const Scalar& p() const;
    [[nodiscard]] const Scalar& q() const;
    /// λᵢ (classical) or κᵢ (q-families).
    [[nodiscard]] const Scalar& label1() const { return label1_; }
    [[nodiscard]] const Scalar& label2() const { return label2_; }

    /// Every parameter, derived ones included, keyed by name.
    [[nodiscard]] ParameterMap parameters() const;

private:
    FamilyInstance() = default;
    void validate() const;

    FamilyKind kind_ = FamilyKind::Hahn;
    Algebra algebra_;
    std::optional<Scalar> alpha_, beta_, gamma_, p_, q_;
    Scalar label1_, label2_;
    int n_max_ = 0;
};

/// P_n(k,N) in the normalization used as CG coefficients, (q-)binomial prefactor
/// included. Zero for n < 0 or n > N.
Scalar poly_value(const FamilyInstance& inst, int n, int k, int N);

using PolyFn = std::function<Scalar(int n, int k, int N)>;
PolyFn poly_function(const FamilyInstance& inst);

/// Raw family formulas at explicit parameters (no validation).
namespace formulas {
Scalar hahn(const Scalar& alpha, const Scalar& beta, int n, int k, int N);
Scalar krawtchouk(const Scalar& p, int n, int k, int N);
Scalar dual_hahn(const Scalar& alpha, const Scalar& beta, int n, int k, int N);
Scalar racah(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, int n, int k, int N);
Scalar q_hahn(const Scalar& q, const Scalar& alpha, const Scalar& beta, int n, int k, int N);
Scalar q_racah(const Scalar& q, const Scalar& alpha, const Scalar& beta, const Scalar& gamma, int n, int k, int N);
}  // namespace formulas

/// Coefficients of the two contiguity relations
///   P_n(k,N+1) = α₁(n,N) P_{n-1}(k,N) + α₂(n,N) P_n(k,N)
///   μ_k(N) P_n(k,N-1) = β₁(n,N) P_{n+1}(k,N) + β₂(n,N) P_n(k,N)
/// with μ_k(N) = φ(coupled label k, N-k).
struct ContiguityData {
    std::function<Scalar(int n, int N)> alpha1;
    std::function<Scalar(int n, int N)> alpha2;
    std::function<Scalar(int n, int N)> beta1;
    std::function<Scalar(int n, int N)> beta2;
    std::function<Scalar(int k, int N)> mu;
};

ContiguityData contiguity(const FamilyInstance& inst);

/// Both relations on 0<=k<=N, -1<=n<=N+1: relation 1 for N < n_max, relation 2 for 1 <= N <= n_max.
Report check_contiguity(const FamilyInstance& inst);
Report check_contiguity(const FamilyInstance& inst, const ContiguityData& data, const PolyFn& poly);

/// The sl2 three-term identity A_n Γ_{n+1} + (A_n+C_n) Γ_n + C_n Γ_{n-1} = μ(k) Γ_n with
/// A_n=(n+1)(n+λ₁), C_n=(N-n+1)(N-n+λ₂), μ(k)=(N-k+1)(N+k+λ₁+λ₂). Requires a dual Hahn
/// instance with α = λ₁ - 1.
Report check_three_term_dual_hahn(const FamilyInstance& inst);
Report check_three_term_dual_hahn(const FamilyInstance& inst, const std::function<Scalar(int k, int N)>& mu);

/// Hahn at α=pz, β=(1-p)z against Krawtchouk(p) at one grid point (n,k,N):
/// asserts d(z₂) <= 2 (z₁/z₂) d(z₁) for consecutive z, where d is the absolute
/// difference of the polynomial values, and the same bound for each of the
/// contiguity coefficients α₁, α₂, β₁, β₂ at (n,N).
Report limit_hahn_to_krawtchouk(const Scalar& p, const std::vector<Scalar>& z_list, int n, int k, int N);

/// Uniform rational with |numerator| <= 20, 1 <= denominator <= 20.
Scalar random_rational(std::mt19937_64& rng);

/// Draws free parameters (numerators/denominators bounded by 20) until the
/// instance validates. q-families use q = r² with r in (0,1) so q^{1/2} is rational.
FamilyInstance random_instance(FamilyKind kind, std::mt19937_64& rng, int n_max);

/// Fills in every free parameter missing from `given` with draws from `rng`,
/// redrawing the missing ones until the instance validates at `n_max`.
/// Throws InvalidParameter when the supplied values themselves are invalid.
ParameterMap complete_parameters(FamilyKind kind, const ParameterMap& given, std::mt19937_64& rng, int n_max);

}  // namespace cgaskey
