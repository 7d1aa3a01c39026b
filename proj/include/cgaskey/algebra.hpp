#pragma once

#include <optional>
#include <string_view>

#include "cgaskey/scalar.hpp"

namespace cgaskey {

enum class AlgebraKind { Osc, Sl2, OscQ, UqSl2 };

/// One of the four algebras, with its deformation parameter for the q-kinds.
struct Algebra {
    AlgebraKind kind = AlgebraKind::Osc;
    std::optional<Scalar> q;

    static Algebra osc() { return {AlgebraKind::Osc, std::nullopt}; }
    static Algebra sl2() { return {AlgebraKind::Sl2, std::nullopt}; }
    /// Throws InvalidParameter unless q is outside {0, 1, -1}.
    static Algebra osc_q(const Scalar& q);
    static Algebra uq_sl2(const Scalar& q);

    [[nodiscard]] bool is_q() const { return kind == AlgebraKind::OscQ || kind == AlgebraKind::UqSl2; }
    [[nodiscard]] const Scalar& deformation() const;

    friend bool operator==(const Algebra&, const Algebra&) = default;
};

std::string_view to_string(AlgebraKind kind);

/// Coefficient of F|λ,n⟩ = φ(λ,n)|λ,n-1⟩. For q-kinds `label` is κ = q^{λ/2}.
///   osc: -n            sl2: -n(n+λ-1)
///   osc_q: 1-q^n       U_q(sl2): (1-q^n)(1-κ²q^{n-1})
Scalar phi(const Algebra& algebra, const Scalar& label, int n);

/// Eigenvalue of H (classical: λ+2n) or K (q-kinds: κq^n) on |λ,n⟩.
Scalar weight_eigenvalue(const Algebra& algebra, const Scalar& label, int n);

/// Label of the k-th summand V_{λ₁+λ₂+2k} in the tensor decomposition:
/// λ₁+λ₂+2k, or κ₁κ₂q^k for the q-kinds.
Scalar coupled_label(const Algebra& algebra, const Scalar& label1, const Scalar& label2, int k);

}  // namespace cgaskey
