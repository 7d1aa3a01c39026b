#include "cgaskey/hypergeometric.hpp"

#include <string>

#include "cgaskey/errors.hpp"

namespace cgaskey {

Scalar pochhammer(const Scalar& b, int k) {
    Scalar result = 1;
    for (int i = 0; i < k; ++i) result *= b + Scalar(i);
    return result;
}

Scalar q_pochhammer(const Scalar& b, const Scalar& q, int k) {
    Scalar result = 1;
    Scalar qi = 1;
    for (int i = 0; i < k; ++i) {
        result *= Scalar(1) - qi * b;
        qi *= q;
    }
    return result;
}

Scalar binomial(int N, int n) {
    if (n < 0 || n > N) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
    return Scalar(mpq_class(r));
}

Scalar q_binomial(int N, int n, const Scalar& q) {
    if (q.is_zero() || q == Scalar(1)) {
        throw InvalidParameter("q-binomial needs q not in {0, 1}, got q=" + q.str());
    }
    if (n < 0 || n > N) return 0;
    return q_pochhammer(q, q, N) / (q_pochhammer(q, q, n) * q_pochhammer(q, q, N - n));
}

namespace {

Scalar sum_terms(std::span<const Scalar> numerators, std::span<const Scalar> denominators, const Scalar& z,
                 int n, auto&& factor, const Scalar& extra_base, const char* name) {
    Scalar sum = 0;
    Scalar zk = 1;
    for (int k = 0; k <= n; ++k) {
        Scalar num = zk;
        for (const auto& a : numerators) num *= factor(a, k);
        Scalar den = factor(extra_base, k);
        for (const auto& b : denominators) den *= factor(b, k);
        if (den.is_zero()) {
            throw SingularParameter(std::string(name) + " term denominator vanishes at k=" + std::to_string(k));
        }
        sum += num / den;
        zk *= z;
    }
    return sum;
}

}  // namespace

Scalar hyper_terminating(std::span<const Scalar> numerators, std::span<const Scalar> denominators,
                         const Scalar& z, int n) {
    if (n < 0) throw InvalidParameter("hyper_terminating: negative degree");
    if (numerators.empty() || numerators.front() != Scalar(-n)) {
        throw InvalidParameter("hyper_terminating: first numerator parameter must be -n");
    }
    return sum_terms(numerators, denominators, z, n, [](const Scalar& b, int k) { return pochhammer(b, k); },
                     Scalar(1), "hypergeometric");
}

Scalar q_hyper_terminating(std::span<const Scalar> numerators, std::span<const Scalar> denominators,
                           const Scalar& q, const Scalar& z, int n) {
    if (n < 0) throw InvalidParameter("q_hyper_terminating: negative degree");
    if (q.is_zero()) throw InvalidParameter("q_hyper_terminating: q must be nonzero");
    if (numerators.empty() || numerators.front() != q.pow(-n)) {
        throw InvalidParameter("q_hyper_terminating: first numerator parameter must be q^-n");
    }
    return sum_terms(numerators, denominators, z, n,
                     [&q](const Scalar& b, int k) { return q_pochhammer(b, q, k); }, q, "basic hypergeometric");
}

}  // namespace cgaskey
