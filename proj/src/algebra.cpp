#include "cgaskey/algebra.hpp"

#include "cgaskey/errors.hpp"

namespace cgaskey {

namespace {

void require_generic_q(const Scalar& q) {
    if (q.is_zero() || q == Scalar(1) || q == Scalar(-1)) {
        throw InvalidParameter("q must not be 0, 1 or -1 (got q=" + q.str() + ")");
    }
}

}  // namespace

Algebra Algebra::osc_q(const Scalar& q) {
    require_generic_q(q);
    return {AlgebraKind::OscQ, q};
}

Algebra Algebra::uq_sl2(const Scalar& q) {
    require_generic_q(q);
    return {AlgebraKind::UqSl2, q};
}

const Scalar& Algebra::deformation() const {
    if (!q) throw InvalidParameter("classical algebra has no deformation parameter");
    return *q;
}

std::string_view to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::Osc: return "osc";
        case AlgebraKind::Sl2: return "sl2";
        case AlgebraKind::OscQ: return "osc_q";
        case AlgebraKind::UqSl2: return "U_q(sl2)";
    }
    return "?";
}

Scalar phi(const Algebra& algebra, const Scalar& label, int n) {
    switch (algebra.kind) {
        case AlgebraKind::Osc: return Scalar(-n);
        case AlgebraKind::Sl2: return Scalar(-n) * (Scalar(n) + label - Scalar(1));
        case AlgebraKind::OscQ: return Scalar(1) - algebra.deformation().pow(n);
        case AlgebraKind::UqSl2: {
            const Scalar& q = algebra.deformation();
            return (Scalar(1) - q.pow(n)) * (Scalar(1) - label * label * q.pow(n - 1));
        }
    }
    return 0;
}

Scalar weight_eigenvalue(const Algebra& algebra, const Scalar& label, int n) {
    if (algebra.is_q()) return label * algebra.deformation().pow(n);
    return label + Scalar(2 * n);
}

Scalar coupled_label(const Algebra& algebra, const Scalar& label1, const Scalar& label2, int k) {
    if (algebra.is_q()) return label1 * label2 * algebra.deformation().pow(k);
    return label1 + label2 + Scalar(2 * k);
}

}  // namespace cgaskey
