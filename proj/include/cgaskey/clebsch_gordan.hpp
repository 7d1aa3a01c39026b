#pragma once

#include <vector>

#include "cgaskey/coproduct.hpp"
#include "cgaskey/family.hpp"
#include "cgaskey/matrix.hpp"
#include "cgaskey/report.hpp"

namespace cgaskey {

/// P[n][k] = P_n(k,N).
struct CGBlock {
    int N = 0;
    Matrix P;

    friend bool operator==(const CGBlock&, const CGBlock&) = default;
};

CGBlock cg_block(const FamilyInstance& inst, int N);
CGBlock cg_block(const PolyFn& poly, int N);

/// dE applied to column k of block N equals column k of block N+1, 0<=k<=N.
Report verify_raising(const FamilyInstance& inst, const TensorModule& tm, int N);
Report verify_raising(const Delta& delta, const PolyFn& poly, int N);

/// dF applied to column k of block N equals φ(coupled label k, N-k) times column k
/// of block N-1; the k=N column is annihilated.
Report verify_lowering(const FamilyInstance& inst, const TensorModule& tm, int N);
Report verify_lowering(const Algebra& algebra, const Scalar& label1, const Scalar& label2, const Delta& delta,
                       const PolyFn& poly, int N);

/// Rebuilds the CG blocks from Δ alone: for each k the one-dimensional kernel of dF
/// on block k, scaled so its n=0 entry is P_0(k,k), pushed up the levels by dE.
/// Throws KernelDimensionError when a kernel is not one-dimensional.
std::vector<CGBlock> lowest_weight_oracle(const FamilyInstance& inst, const TensorModule& tm);
std::vector<CGBlock> lowest_weight_oracle(const Delta& delta, const PolyFn& poly, int n_max);

/// Oracle blocks against cg_block on every level.
Report verify_oracle(const FamilyInstance& inst, const TensorModule& tm);
Report verify_oracle(const Delta& delta, const PolyFn& poly, int n_max);

struct WeightData {
    int N = 0;
    Vector omega;
    Vector omega_prime;
};

/// Ω with Σ_n P[n][k]P[n][ℓ]Ω_n = 0 for k≠ℓ, normalized Ω_0 = 1, and Ω′_ℓ = Σ_n P[n][ℓ]²Ω_n.
/// Throws SolutionSpaceError if the solution space is not one-dimensional or some Ω′_ℓ is 0.
WeightData orthogonality_weights(const FamilyInstance& inst, int N);
WeightData orthogonality_weights(const CGBlock& block);

/// Solves for the weights on every level up to n_max and re-checks the orthogonality sums.
Report verify_orthogonality(const FamilyInstance& inst);
Report verify_orthogonality(const PolyFn& poly, int n_max);

/// Δ(H) = λ₁+λ₂+2N (Δ(K) = κ₁κ₂q^N) on every block.
Report verify_weight_grading(const FamilyInstance& inst, const TensorModule& tm);
Report verify_weight_grading(const Algebra& algebra, const Scalar& label1, const Scalar& label2, const Delta& delta);

/// Every CG block has full rank.
Report verify_invertible(const FamilyInstance& inst);

}  // namespace cgaskey
