#pragma once

// Test-side reference implementations. They share nothing with the library
// beyond Scalar and Matrix storage: series are summed through term ratios,
// binomials come from Pascal triangles and nullspaces from plain Gauss-Jordan.

#include <vector>

#include "cgaskey/family.hpp"
#include "cgaskey/matrix.hpp"

namespace oracle {

using cgaskey::Matrix;
using cgaskey::Scalar;
using cgaskey::Vector;

/// Σ_j t_j with t_0 = 1 and t_{j+1}/t_j = Π(a_i+j)/Π(b_i+j) · z/(j+1); stops after j = n.
inline Scalar ratio_hyper(const std::vector<Scalar>& num, const std::vector<Scalar>& den, const Scalar& z, int n) {
    Scalar term(1), sum(1);
    for (int j = 0; j < n; ++j) {
        Scalar top(1), bottom(j + 1);
        for (const auto& a : num) top = top * (a + Scalar(j));
        for (const auto& b : den) bottom = bottom * (b + Scalar(j));
        term = term * top * z / bottom;
        sum = sum + term;
    }
    return sum;
}

/// q-analogue: t_{j+1}/t_j = Π(1-a_i q^j)/Π(1-b_i q^j) · z/(1-q^{j+1}).
inline Scalar ratio_q_hyper(const std::vector<Scalar>& num, const std::vector<Scalar>& den, const Scalar& q,
                            const Scalar& z, int n) {
    Scalar term(1), sum(1), qj(1);
    for (int j = 0; j < n; ++j) {
        Scalar top(1), bottom = Scalar(1) - qj * q;
        for (const auto& a : num) top = top * (Scalar(1) - a * qj);
        for (const auto& b : den) bottom = bottom * (Scalar(1) - b * qj);
        term = term * top * z / bottom;
        sum = sum + term;
        qj = qj * q;
    }
    return sum;
}

inline Scalar power(const Scalar& x, int e) {
    Scalar out(1);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out = out * x;
    return e < 0 ? Scalar(1) / out : out;
}

inline Scalar pascal(int N, int n) {
    if (n < 0 || n > N) return Scalar(0);
    std::vector<Scalar> row{Scalar(1)};
    for (int r = 1; r <= N; ++r) {
        std::vector<Scalar> next(static_cast<std::size_t>(r + 1), Scalar(1));
        for (int i = 1; i < r; ++i) next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)] + row[static_cast<std::size_t>(i)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(n)];
}

/// [N n]_q from the q-Pascal rule [N n] = [N-1 n-1] + q^n [N-1 n].
inline Scalar q_pascal(int N, int n, const Scalar& q) {
    if (n < 0 || n > N) return Scalar(0);
    if (n == 0 || n == N) return Scalar(1);
    return q_pascal(N - 1, n - 1, q) + power(q, n) * q_pascal(N - 1, n, q);
}

/// P_n(k,N) for a resolved instance, straight from the series displays.
inline Scalar poly(const cgaskey::FamilyInstance& inst, int n, int k, int N) {
    using cgaskey::FamilyKind;
    if (n < 0 || n > N) return Scalar(0);
    const auto P = inst.parameters();
    auto get = [&](const char* key) { return P.at(key); };
    switch (inst.kind()) {
        case FamilyKind::Hahn:
            return pascal(N, n) * ratio_hyper({Scalar(-n), Scalar(n - N + 1) + get("alpha") + get("beta"), Scalar(-k)},
                                              {get("alpha") + Scalar(1), Scalar(-N)}, Scalar(1), n);
        case FamilyKind::Krawtchouk:
            return pascal(N, n) * ratio_hyper({Scalar(-n), Scalar(-k)}, {Scalar(-N)}, Scalar(1) / get("p"), n);
        case FamilyKind::DualHahn:
            return pascal(N, n) * ratio_hyper({Scalar(-k), Scalar(k + 1) + get("alpha") + get("beta"), Scalar(-n)},
                                              {get("alpha") + Scalar(1), Scalar(-N)}, Scalar(1), n);
        case FamilyKind::Racah:
            return pascal(N, n) *
                   ratio_hyper({Scalar(-n), Scalar(n - N + 1) + get("alpha") + get("beta"), Scalar(-k), Scalar(k) + get("gamma")},
                               {get("alpha") + Scalar(1), get("beta") + get("gamma") + Scalar(1), Scalar(-N)}, Scalar(1), n);
        case FamilyKind::QHahn: {
            const Scalar q = get("q");
            return q_pascal(N, n, q) *
                   ratio_q_hyper({power(q, -n), get("alpha") * get("beta") * power(q, n - N + 1), power(q, -k)},
                                 {get("alpha") * q, power(q, -N)}, q, q, n);
        }
        case FamilyKind::QRacah: {
            const Scalar q = get("q");
            return q_pascal(N, n, q) *
                   ratio_q_hyper({power(q, -n), get("alpha") * get("beta") * power(q, n - N + 1), power(q, -k),
                                  get("gamma") * power(q, k)},
                                 {get("alpha") * q, get("beta") * get("gamma") * q, power(q, -N)}, q, q, n);
        }
    }
    return Scalar(0);
}

/// Nullspace basis by Gauss-Jordan over the rationals.
inline std::vector<Vector> nullspace(const Matrix& m) {
    std::vector<Vector> rows(m.rows(), Vector(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        const Scalar inv = Scalar(1) / rows[rank][c];
        for (auto& e : rows[rank]) e = e * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            const Scalar f = rows[r][c];
            for (std::size_t j = 0; j < m.cols(); ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        bool is_pivot = false;
        for (auto pc : pivot_cols) is_pivot = is_pivot || pc == free;
        if (is_pivot) continue;
        Vector v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace oracle
