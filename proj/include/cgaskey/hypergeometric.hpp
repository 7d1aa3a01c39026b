#pragma once

#include <span>

#include "cgaskey/scalar.hpp"

namespace cgaskey {

/// Rising factorial (b)_k = b(b+1)...(b+k-1); (b)_0 = 1.
Scalar pochhammer(const Scalar& b, int k);

/// (b;q)_k = (1-b)(1-qb)...(1-q^{k-1}b); (b;q)_0 = 1.
Scalar q_pochhammer(const Scalar& b, const Scalar& q, int k);

/// Ordinary binomial coefficient; zero outside 0 <= n <= N.
Scalar binomial(int N, int n);

/// Gaussian binomial (q;q)_N / ((q;q)_n (q;q)_{N-n}); zero outside 0 <= n <= N.
/// Throws InvalidParameter for q in {0, 1}.
Scalar q_binomial(int N, int n, const Scalar& q);

/// Terminating r+1Fr series. `numerators` must start with -n; the sum runs k = 0..n.
/// Each term is formed as one reduced product before accumulation; a vanishing
/// denominator factor throws SingularParameter naming the term index.
Scalar hyper_terminating(std::span<const Scalar> numerators, std::span<const Scalar> denominators,
                         const Scalar& z, int n);

/// Terminating basic series r+1phir with the extra (q;q)_k in each denominator.
/// `numerators` must start with q^{-n}.
Scalar q_hyper_terminating(std::span<const Scalar> numerators, std::span<const Scalar> denominators,
                           const Scalar& q, const Scalar& z, int n);

}  // namespace cgaskey
