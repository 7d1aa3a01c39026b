#include "cgaskey/family.hpp"

#include <array>
#include <string>

#include "cgaskey/errors.hpp"
#include "cgaskey/hypergeometric.hpp"
#include "cgaskey/matrix.hpp"

namespace cgaskey {

namespace {

std::string at(int n, int N) {
    return " (n=" + std::to_string(n) + ", N=" + std::to_string(N) + ")";
}

const Scalar& require(const std::optional<Scalar>& value, const char* name, FamilyKind kind) {
    if (!value) {
        throw InvalidParameter(std::string(to_string(kind)) + " family has no parameter " + name);
    }
    return *value;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Hahn: return "hahn";
        case FamilyKind::Krawtchouk: return "krawtchouk";
        case FamilyKind::DualHahn: return "dual-hahn";
        case FamilyKind::Racah: return "racah";
        case FamilyKind::QHahn: return "q-hahn";
        case FamilyKind::QRacah: return "q-racah";
    }
    return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
    for (auto kind : kAllFamilies) {
        if (to_string(kind) == name) return kind;
    }
    throw ParseError("unknown family '" + std::string(name) +
                     "' (expected hahn, krawtchouk, dual-hahn, racah, q-hahn or q-racah)");
}

bool is_q_family(FamilyKind kind) {
    return kind == FamilyKind::QHahn || kind == FamilyKind::QRacah;
}

std::vector<std::string> free_parameters(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Hahn: return {"alpha", "beta", "lambda1", "lambda2"};
        case FamilyKind::Krawtchouk: return {"p", "lambda1", "lambda2"};
        case FamilyKind::DualHahn: return {"alpha", "lambda1", "lambda2"};
        case FamilyKind::Racah: return {"alpha", "beta", "lambda1", "lambda2"};
        case FamilyKind::QHahn:
        case FamilyKind::QRacah: return {"q", "alpha", "beta", "kappa1", "kappa2"};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Construction

FamilyInstance FamilyInstance::hahn(const Scalar& alpha, const Scalar& beta, const Scalar& lambda1,
                                    const Scalar& lambda2, int n_max) {
    FamilyInstance f;
    f.kind_ = FamilyKind::Hahn;
    f.algebra_ = Algebra::osc();
    f.alpha_ = alpha;
    f.beta_ = beta;
    f.label1_ = lambda1;
    f.label2_ = lambda2;
    f.n_max_ = n_max;
    f.validate();
    return f;
}

FamilyInstance FamilyInstance::krawtchouk(const Scalar& p, const Scalar& lambda1, const Scalar& lambda2, int n_max) {
    FamilyInstance f;
    f.kind_ = FamilyKind::Krawtchouk;
    f.algebra_ = Algebra::osc();
    f.p_ = p;
    f.label1_ = lambda1;
    f.label2_ = lambda2;
    f.n_max_ = n_max;
    f.validate();
    return f;
}

FamilyInstance FamilyInstance::dual_hahn(const Scalar& alpha, const Scalar& lambda1, const Scalar& lambda2,
                                         int n_max) {
    FamilyInstance f;
    f.kind_ = FamilyKind::DualHahn;
    f.algebra_ = Algebra::sl2();
    f.alpha_ = alpha;
    f.beta_ = lambda1 + lambda2 - Scalar(2) - alpha;
    f.label1_ = lambda1;
    f.label2_ = lambda2;
    f.n_max_ = n_max;
    f.validate();
    return f;
}

FamilyInstance FamilyInstance::racah(const Scalar& alpha, const Scalar& beta, const Scalar& lambda1,
                                     const Scalar& lambda2, int n_max) {
    FamilyInstance f;
    f.kind_ = FamilyKind::Racah;
    f.algebra_ = Algebra::sl2();
    f.alpha_ = alpha;
    f.beta_ = beta;
    f.gamma_ = lambda1 + lambda2 - Scalar(1);
    f.label1_ = lambda1;
    f.label2_ = lambda2;
    f.n_max_ = n_max;
    f.validate();
    return f;
}

FamilyInstance FamilyInstance::q_hahn(const Scalar& q, const Scalar& alpha, const Scalar& beta, const Scalar& kappa1,
                                      const Scalar& kappa2, int n_max) {
    FamilyInstance f;
    f.kind_ = FamilyKind::QHahn;
    f.algebra_ = Algebra::osc_q(q);
    f.q_ = q;
    f.alpha_ = alpha;
    f.beta_ = beta;
    f.label1_ = kappa1;
    f.label2_ = kappa2;
    f.n_max_ = n_max;
    f.validate();
    return f;
}

FamilyInstance FamilyInstance::q_racah(const Scalar& q, const Scalar& alpha, const Scalar& beta,
                                       const Scalar& kappa1, const Scalar& kappa2, int n_max) {
    FamilyInstance f;
    f.kind_ = FamilyKind::QRacah;
    f.algebra_ = Algebra::uq_sl2(q);
    f.q_ = q;
    f.alpha_ = alpha;
    f.beta_ = beta;
    f.label1_ = kappa1;
    f.label2_ = kappa2;
    f.gamma_ = kappa1 * kappa1 * kappa2 * kappa2 / q;
    f.n_max_ = n_max;
    f.validate();
    return f;
}

FamilyInstance FamilyInstance::from_parameters(FamilyKind kind, const ParameterMap& params, int n_max) {
    const auto allowed = free_parameters(kind);
    for (const auto& [name, value] : params) {
        bool ok = false;
        for (const auto& a : allowed) ok = ok || a == name;
        if (!ok) {
            throw InvalidParameter("parameter '" + name + "' is not a free parameter of the " +
                                   std::string(to_string(kind)) + " family");
        }
    }
    auto get = [&](const std::string& name) -> const Scalar& {
        auto it = params.find(name);
        if (it == params.end()) {
            throw InvalidParameter("missing parameter '" + name + "' for the " + std::string(to_string(kind)) +
                                   " family");
        }
        return it->second;
    };
    switch (kind) {
        case FamilyKind::Hahn: return hahn(get("alpha"), get("beta"), get("lambda1"), get("lambda2"), n_max);
        case FamilyKind::Krawtchouk: return krawtchouk(get("p"), get("lambda1"), get("lambda2"), n_max);
        case FamilyKind::DualHahn: return dual_hahn(get("alpha"), get("lambda1"), get("lambda2"), n_max);
        case FamilyKind::Racah: return racah(get("alpha"), get("beta"), get("lambda1"), get("lambda2"), n_max);
        case FamilyKind::QHahn:
            return q_hahn(get("q"), get("alpha"), get("beta"), get("kappa1"), get("kappa2"), n_max);
        case FamilyKind::QRacah:
            return q_racah(get("q"), get("alpha"), get("beta"), get("kappa1"), get("kappa2"), n_max);
    }
    throw InvalidParameter("unknown family");
}

const Scalar& FamilyInstance::alpha() const { return require(alpha_, "alpha", kind_); }
const Scalar& FamilyInstance::beta() const { return require(beta_, "beta", kind_); }
const Scalar& FamilyInstance::gamma() const { return require(gamma_, "gamma", kind_); }
const Scalar& FamilyInstance::p() const { return require(p_, "p", kind_); }
const Scalar& FamilyInstance::q() const { return require(q_, "q", kind_); }

ParameterMap FamilyInstance::parameters() const {
    ParameterMap out;
    if (alpha_) out["alpha"] = *alpha_;
    if (beta_) out["beta"] = *beta_;
    if (gamma_) out["gamma"] = *gamma_;
    if (p_) out["p"] = *p_;
    if (q_) out["q"] = *q_;
    const bool qk = is_q_family(kind_);
    out[qk ? "kappa1" : "lambda1"] = label1_;
    out[qk ? "kappa2" : "lambda2"] = label2_;
    return out;
}

void FamilyInstance::validate() const {
    if (n_max_ < 0) throw InvalidParameter("n_max must be non-negative");
    const std::string fam(to_string(kind_));
    if (kind_ == FamilyKind::Krawtchouk && (p_->is_zero() || *p_ == Scalar(1))) {
        throw InvalidParameter("krawtchouk family needs p not in {0, 1} (got p=" + p_->str() + ")");
    }
    if (is_q_family(kind_) && (label1_.is_zero() || label2_.is_zero())) {
        throw InvalidParameter("kappa labels q^{lambda/2} must be nonzero");
    }

    // Irreducibility of the factor modules and of every summand up to the truncation.
    const char* l1 = is_q_family(kind_) ? "kappa1" : "lambda1";
    const char* l2 = is_q_family(kind_) ? "kappa2" : "lambda2";
    for (int n = 1; n <= n_max_ + 1; ++n) {
        if (phi(algebra_, label1_, n).is_zero()) {
            throw InvalidParameter(std::string("module label ") + l1 + "=" + label1_.str() +
                                   " is degenerate: phi vanishes at level " + std::to_string(n) +
                                   " (labels must not be non-positive integers)");
        }
        if (phi(algebra_, label2_, n).is_zero()) {
            throw InvalidParameter(std::string("module label ") + l2 + "=" + label2_.str() +
                                   " is degenerate: phi vanishes at level " + std::to_string(n) +
                                   " (labels must not be non-positive integers)");
        }
    }
    const auto data = contiguity(*this);
    for (int N = 1; N <= n_max_; ++N) {
        for (int k = 0; k < N; ++k) {
            if (data.mu(k, N).is_zero()) {
                throw InvalidParameter("coupled module " + std::to_string(k) +
                                       " is degenerate: mu_k(N) vanishes at N=" + std::to_string(N) +
                                       " (lambda1+lambda2 must not be a non-positive integer)");
            }
        }
    }
    try {
        for (int N = 0; N <= n_max_; ++N) {
            for (int n = -1; n <= N + 1; ++n) {
                if (N < n_max_) {
                    (void)data.alpha1(n, N);
                    (void)data.alpha2(n, N);
                }
                if (N >= 1) {
                    (void)data.beta1(n, N);
                    (void)data.beta2(n, N);
                }
            }
        }
        for (int N = 0; N <= n_max_; ++N) {
            Matrix block(static_cast<std::size_t>(N) + 1, static_cast<std::size_t>(N) + 1);
            for (int n = 0; n <= N; ++n) {
                for (int k = 0; k <= N; ++k) block(n, k) = poly_value(*this, n, k, N);
            }
            if (rank(block) != static_cast<std::size_t>(N) + 1) {
                throw InvalidParameter(fam + " CG block at N=" + std::to_string(N) +
                                       " is singular for these parameters");
            }
        }
    } catch (const SingularParameter& e) {
        throw InvalidParameter(fam + " parameters are not generic: " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Polynomials

namespace formulas {

Scalar hahn(const Scalar& alpha, const Scalar& beta, int n, int k, int N) {
    if (n < 0 || n > N) return 0;
    const std::array<Scalar, 3> num{Scalar(-n), Scalar(n - N + 1) + alpha + beta, Scalar(-k)};
    const std::array<Scalar, 2> den{alpha + Scalar(1), Scalar(-N)};
    return binomial(N, n) * hyper_terminating(num, den, Scalar(1), n);
}

Scalar krawtchouk(const Scalar& p, int n, int k, int N) {
    if (n < 0 || n > N) return 0;
    const std::array<Scalar, 2> num{Scalar(-n), Scalar(-k)};
    const std::array<Scalar, 1> den{Scalar(-N)};
    return binomial(N, n) * hyper_terminating(num, den, p.inverse(), n);
}

Scalar dual_hahn(const Scalar& alpha, const Scalar& beta, int n, int k, int N) {
    if (n < 0 || n > N) return 0;
    const std::array<Scalar, 3> num{Scalar(-n), Scalar(-k), Scalar(k + 1) + alpha + beta};
    const std::array<Scalar, 2> den{alpha + Scalar(1), Scalar(-N)};
    return binomial(N, n) * hyper_terminating(num, den, Scalar(1), n);
}

Scalar racah(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, int n, int k, int N) {
    if (n < 0 || n > N) return 0;
    const std::array<Scalar, 4> num{Scalar(-n), Scalar(n - N + 1) + alpha + beta, Scalar(-k), Scalar(k) + gamma};
    const std::array<Scalar, 3> den{alpha + Scalar(1), beta + gamma + Scalar(1), Scalar(-N)};
    return binomial(N, n) * hyper_terminating(num, den, Scalar(1), n);
}

Scalar q_hahn(const Scalar& q, const Scalar& alpha, const Scalar& beta, int n, int k, int N) {
    if (n < 0 || n > N) return 0;
    const std::array<Scalar, 3> num{q.pow(-n), alpha * beta * q.pow(n - N + 1), q.pow(-k)};
    const std::array<Scalar, 2> den{alpha * q, q.pow(-N)};
    return q_binomial(N, n, q) * q_hyper_terminating(num, den, q, q, n);
}

Scalar q_racah(const Scalar& q, const Scalar& alpha, const Scalar& beta, const Scalar& gamma, int n, int k, int N) {
    if (n < 0 || n > N) return 0;
    const std::array<Scalar, 4> num{q.pow(-n), alpha * beta * q.pow(n - N + 1), q.pow(-k), gamma * q.pow(k)};
    const std::array<Scalar, 3> den{alpha * q, beta * gamma * q, q.pow(-N)};
    return q_binomial(N, n, q) * q_hyper_terminating(num, den, q, q, n);
}

}  // namespace formulas

Scalar poly_value(const FamilyInstance& inst, int n, int k, int N) {
    switch (inst.kind()) {
        case FamilyKind::Hahn: return formulas::hahn(inst.alpha(), inst.beta(), n, k, N);
        case FamilyKind::Krawtchouk: return formulas::krawtchouk(inst.p(), n, k, N);
        case FamilyKind::DualHahn: return formulas::dual_hahn(inst.alpha(), inst.beta(), n, k, N);
        case FamilyKind::Racah: return formulas::racah(inst.alpha(), inst.beta(), inst.gamma(), n, k, N);
        case FamilyKind::QHahn: return formulas::q_hahn(inst.q(), inst.alpha(), inst.beta(), n, k, N);
        case FamilyKind::QRacah:
            return formulas::q_racah(inst.q(), inst.alpha(), inst.beta(), inst.gamma(), n, k, N);
    }
    return 0;
}

PolyFn poly_function(const FamilyInstance& inst) {
    return [inst](int n, int k, int N) { return poly_value(inst, n, k, N); };
}

// ---------------------------------------------------------------------------
// Contiguity coefficients

namespace {

// α₁, α₂ shared by Hahn and Racah; denominator 2n+α+β-N.
void hahn_type_first(ContiguityData& d, const Scalar& a, const Scalar& b) {
    d.alpha1 = [a, b](int n, int N) {
        return checked_div(Scalar(n + 1) + a + b, Scalar(2 * n - N) + a + b,
                           "2n+alpha+beta-N" + at(n, N) + "; genericity restriction alpha+beta not an integer");
    };
    d.alpha2 = [a, b](int n, int N) {
        return checked_div(Scalar(n - N) + a + b, Scalar(2 * n - N) + a + b,
                           "2n+alpha+beta-N" + at(n, N) + "; genericity restriction alpha+beta not an integer");
    };
}

Scalar hahn_type_den(const Scalar& a, const Scalar& b, int n, int N) {
    const Scalar den = Scalar(2 * n + 2 - N) + a + b;
    if (den.is_zero()) {
        throw SingularParameter("vanishing denominator: 2n+2+alpha+beta-N" + at(n, N) +
                                "; genericity restriction alpha+beta not an integer");
    }
    return den;
}

// α₁, α₂ shared by the q-families; denominator 1-αβq^{2n-N}.
void q_hahn_type_first(ContiguityData& d, const Scalar& q, const Scalar& a, const Scalar& b) {
    d.alpha1 = [q, a, b](int n, int N) {
        return checked_div(Scalar(1) - a * b * q.pow(n + 1), Scalar(1) - a * b * q.pow(2 * n - N),
                           "1-alpha*beta*q^(2n-N)" + at(n, N));
    };
    d.alpha2 = [q, a, b](int n, int N) {
        return checked_div(q.pow(n) * (Scalar(1) - a * b * q.pow(n - N)), Scalar(1) - a * b * q.pow(2 * n - N),
                           "1-alpha*beta*q^(2n-N)" + at(n, N));
    };
}

Scalar q_hahn_type_den(const Scalar& q, const Scalar& a, const Scalar& b, int n, int N) {
    const Scalar den = Scalar(1) - a * b * q.pow(2 * n + 2 - N);
    if (den.is_zero()) throw SingularParameter("vanishing denominator: 1-alpha*beta*q^(2n+2-N)" + at(n, N));
    return den;
}

}  // namespace

ContiguityData contiguity(const FamilyInstance& inst) {
    ContiguityData d;
    switch (inst.kind()) {
        case FamilyKind::Hahn: {
            // Second relation carries a global factor -1 so that μ_k(N) = φ_osc(N-k) = -(N-k).
            const Scalar a = inst.alpha();
            const Scalar b = inst.beta();
            hahn_type_first(d, a, b);
            d.mu = [](int k, int N) { return Scalar(k - N); };
            d.beta1 = [a, b](int n, int N) {
                return -(Scalar(n + 1) + a) * Scalar(n + 1) / hahn_type_den(a, b, n, N);
            };
            d.beta2 = [a, b](int n, int N) {
                return -(Scalar(n + 1 - N) + b) * Scalar(N - n) / hahn_type_den(a, b, n, N);
            };
            break;
        }
        case FamilyKind::Krawtchouk: {
            const Scalar p = inst.p();
            d.alpha1 = [](int, int) { return Scalar(1); };
            d.alpha2 = [](int, int) { return Scalar(1); };
            d.mu = [](int k, int N) { return Scalar(k - N); };
            d.beta1 = [p](int n, int) { return -p * Scalar(n + 1); };
            d.beta2 = [p](int n, int N) { return -(Scalar(1) - p) * Scalar(N - n); };
            break;
        }
        case FamilyKind::DualHahn: {
            const Scalar a = inst.alpha();
            const Scalar b = inst.beta();
            d.alpha1 = [](int, int) { return Scalar(1); };
            d.alpha2 = [](int, int) { return Scalar(1); };
            d.mu = [a, b](int k, int N) { return Scalar(k - N) * (Scalar(N + k + 1) + a + b); };
            d.beta1 = [a](int n, int) { return -(Scalar(n + 1) + a) * Scalar(n + 1); };
            d.beta2 = [b](int n, int N) { return (Scalar(N - n) + b) * Scalar(n - N); };
            break;
        }
        case FamilyKind::Racah: {
            const Scalar a = inst.alpha();
            const Scalar b = inst.beta();
            const Scalar g = inst.gamma();
            hahn_type_first(d, a, b);
            d.mu = [g](int k, int N) { return Scalar(k - N) * (Scalar(N + k) + g); };
            d.beta1 = [a, b, g](int n, int N) {
                return -(Scalar(n + 1) + b + g) * (Scalar(n + 1) + a) * Scalar(n + 1) / hahn_type_den(a, b, n, N);
            };
            d.beta2 = [a, b, g](int n, int N) {
                return (Scalar(n + 1 - N) + b) * (Scalar(n + 1 - N) + a - g) * Scalar(N - n) /
                       hahn_type_den(a, b, n, N);
            };
            break;
        }
        case FamilyKind::QHahn: {
            const Scalar q = inst.q();
            const Scalar a = inst.alpha();
            const Scalar b = inst.beta();
            q_hahn_type_first(d, q, a, b);
            d.mu = [q](int k, int N) { return Scalar(1) - q.pow(N - k); };
            d.beta1 = [q, a, b](int n, int N) {
                return (Scalar(1) - a * q.pow(n + 1)) * (Scalar(1) - q.pow(n + 1)) / q_hahn_type_den(q, a, b, n, N);
            };
            d.beta2 = [q, a, b](int n, int N) {
                return a * q.pow(n + 1) * (Scalar(1) - b * q.pow(n + 1 - N)) * (Scalar(1) - q.pow(N - n)) /
                       q_hahn_type_den(q, a, b, n, N);
            };
            break;
        }
        case FamilyKind::QRacah: {
            const Scalar q = inst.q();
            const Scalar a = inst.alpha();
            const Scalar b = inst.beta();
            const Scalar g = inst.gamma();
            q_hahn_type_first(d, q, a, b);
            d.mu = [q, g](int k, int N) { return (Scalar(1) - q.pow(N - k)) * (Scalar(1) - g * q.pow(N + k)); };
            d.beta1 = [q, a, b, g](int n, int N) {
                return (Scalar(1) - b * g * q.pow(n + 1)) * (Scalar(1) - a * q.pow(n + 1)) *
                       (Scalar(1) - q.pow(n + 1)) / q_hahn_type_den(q, a, b, n, N);
            };
            d.beta2 = [q, a, b, g](int n, int N) {
                return (Scalar(1) - b * q.pow(n + 1 - N)) * (a * q.pow(n + 1) - g * q.pow(N)) *
                       (Scalar(1) - q.pow(N - n)) / q_hahn_type_den(q, a, b, n, N);
            };
            break;
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Checks

Report check_contiguity(const FamilyInstance& inst) {
    return check_contiguity(inst, contiguity(inst), poly_function(inst));
}

Report check_contiguity(const FamilyInstance& inst, const ContiguityData& data, const PolyFn& poly) {
    const int n_max = inst.n_max();
    Report report{"contiguity", {}};

    CheckRecorder first("contiguity-relation-1",
                        "0<=N<" + std::to_string(n_max) + ", 0<=k<=N, -1<=n<=N+1");
    for (int N = 0; N < n_max; ++N) {
        for (int k = 0; k <= N; ++k) {
            for (int n = -1; n <= N + 1; ++n) {
                const Scalar lhs = poly(n, k, N + 1);
                const Scalar rhs = data.alpha1(n, N) * poly(n - 1, k, N) + data.alpha2(n, N) * poly(n, k, N);
                first.expect_equal(lhs, rhs, {{"N", N}, {"n", n}, {"k", k}});
            }
        }
    }
    report.checks.push_back(first.finish());

    CheckRecorder second("contiguity-relation-2",
                         "1<=N<=" + std::to_string(n_max) + ", 0<=k<=N, -1<=n<=N+1");
    for (int N = 1; N <= n_max; ++N) {
        for (int k = 0; k <= N; ++k) {
            for (int n = -1; n <= N + 1; ++n) {
                // k = N: μ_N(N) = 0 and the lowered vector is absent.
                const Scalar lhs = k == N ? Scalar(0) : data.mu(k, N) * poly(n, k, N - 1);
                const Scalar rhs = data.beta1(n, N) * poly(n + 1, k, N) + data.beta2(n, N) * poly(n, k, N);
                second.expect_equal(lhs, rhs, {{"N", N}, {"n", n}, {"k", k}});
            }
        }
    }
    report.checks.push_back(second.finish());
    return report;
}

Report check_three_term_dual_hahn(const FamilyInstance& inst) {
    const Scalar l1 = inst.label1();
    const Scalar l2 = inst.label2();
    return check_three_term_dual_hahn(
        inst, [l1, l2](int k, int N) { return Scalar(N - k + 1) * (Scalar(N + k) + l1 + l2); });
}

Report check_three_term_dual_hahn(const FamilyInstance& inst, const std::function<Scalar(int k, int N)>& mu) {
    if (inst.kind() != FamilyKind::DualHahn) {
        throw InvalidParameter("three-term check needs a dual-hahn instance");
    }
    const Scalar l1 = inst.label1();
    const Scalar l2 = inst.label2();
    if (inst.alpha() != l1 - Scalar(1)) {
        throw InvalidParameter("three-term check needs alpha = lambda1 - 1 (standard sl2 coproduct)");
    }
    CheckRecorder rec("three-term-recurrence", "0<=n,k<=N<=" + std::to_string(inst.n_max()));
    for (int N = 0; N <= inst.n_max(); ++N) {
        for (int k = 0; k <= N; ++k) {
            for (int n = 0; n <= N; ++n) {
                const Scalar A = Scalar(n + 1) * (Scalar(n) + l1);
                const Scalar C = Scalar(N - n + 1) * (Scalar(N - n) + l2);
                const Scalar lhs = A * poly_value(inst, n + 1, k, N) + (A + C) * poly_value(inst, n, k, N) +
                                   C * poly_value(inst, n - 1, k, N);
                rec.expect_equal(lhs, mu(k, N) * poly_value(inst, n, k, N), {{"N", N}, {"n", n}, {"k", k}});
            }
        }
    }
    return {"three-term", {rec.finish()}};
}

Report limit_hahn_to_krawtchouk(const Scalar& p, const std::vector<Scalar>& z_list, int n, int k, int N) {
    if (z_list.size() < 2) throw InvalidParameter("limit check needs at least two z values");
    for (std::size_t i = 1; i < z_list.size(); ++i) {
        if (!(z_list[i - 1] < z_list[i]) || z_list[i - 1].sign() <= 0) {
            throw InvalidParameter("z values must be positive and increasing");
        }
    }
    const auto kraw = FamilyInstance::krawtchouk(p, Scalar(1), Scalar(1), N);
    const auto kdata = contiguity(kraw);
    const Scalar target = poly_value(kraw, n, k, N);

    struct Sample {
        Scalar poly;
        std::array<Scalar, 4> coeffs;
    };
    std::vector<Sample> diffs;
    const int cn = N >= 1 ? N : 1;  // coefficient functions need a level with both relations
    for (const auto& z : z_list) {
        const auto hahn = FamilyInstance::hahn(p * z, (Scalar(1) - p) * z, Scalar(1), Scalar(1), cn);
        const auto hdata = contiguity(hahn);
        diffs.push_back({(poly_value(hahn, n, k, N) - target).abs(),
                         {(hdata.alpha1(n, cn - 1) - kdata.alpha1(n, cn - 1)).abs(),
                          (hdata.alpha2(n, cn - 1) - kdata.alpha2(n, cn - 1)).abs(),
                          (hdata.beta1(n, cn) - kdata.beta1(n, cn)).abs(),
                          (hdata.beta2(n, cn) - kdata.beta2(n, cn)).abs()}});
    }

    const std::string range = "(n,k,N)=(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(N) +
                              "), " + std::to_string(z_list.size()) + " z values";
    CheckRecorder poly_rec("hahn-krawtchouk-poly-decay", range);
    CheckRecorder coeff_rec("hahn-krawtchouk-coefficient-decay", range);
    static const char* const kNames[] = {"alpha1", "alpha2", "beta1", "beta2"};
    for (std::size_t i = 1; i < z_list.size(); ++i) {
        const Scalar bound = Scalar(2) * z_list[i - 1] / z_list[i];
        const auto idx = static_cast<long>(i);
        poly_rec.expect(diffs[i].poly <= bound * diffs[i - 1].poly, {{"z_index", idx}}, diffs[i].poly.str(),
                        (bound * diffs[i - 1].poly).str(), "d(z_i) <= 2 z_{i-1}/z_i * d(z_{i-1})");
        for (std::size_t c = 0; c < 4; ++c) {
            coeff_rec.expect(diffs[i].coeffs[c] <= bound * diffs[i - 1].coeffs[c], {{"z_index", idx}},
                             diffs[i].coeffs[c].str(), (bound * diffs[i - 1].coeffs[c]).str(), kNames[c]);
        }
    }
    return {"limit-hahn-krawtchouk", {poly_rec.finish(), coeff_rec.finish()}};
}

// ---------------------------------------------------------------------------
// Random parameter draws

Scalar random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    const long a = num(rng);
    const long b = den(rng);
    return Scalar(a, b);
}

namespace {

Scalar random_unit_interval(std::mt19937_64& rng, long max_den) {
    std::uniform_int_distribution<long> den(2, max_den);
    const long b = den(rng);
    std::uniform_int_distribution<long> num(1, b - 1);
    return Scalar(num(rng), b);
}

Scalar draw(const std::string& name, std::mt19937_64& rng) {
    if (name == "p") return random_unit_interval(rng, 20);
    if (name == "q") {
        // q = r² keeps q^{1/2} rational; numerator and denominator stay <= 16.
        const Scalar r = random_unit_interval(rng, 4);
        return r * r;
    }
    Scalar x = random_rational(rng);
    while (x.is_zero()) x = random_rational(rng);
    return x;
}

}  // namespace

ParameterMap complete_parameters(FamilyKind kind, const ParameterMap& given, std::mt19937_64& rng, int n_max) {
    std::vector<std::string> missing;
    for (const auto& name : free_parameters(kind)) {
        if (!given.contains(name)) missing.push_back(name);
    }
    if (missing.empty()) {
        (void)FamilyInstance::from_parameters(kind, given, n_max);
        return given;
    }
    constexpr int kAttempts = 2000;
    std::string last_error;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        ParameterMap params = given;
        for (const auto& name : missing) params[name] = draw(name, rng);
        try {
            (void)FamilyInstance::from_parameters(kind, params, n_max);
            return params;
        } catch (const InvalidParameter& e) {
            last_error = e.what();
        }
    }
    throw InvalidParameter("no valid completion of the given parameters found: " + last_error);
}

FamilyInstance random_instance(FamilyKind kind, std::mt19937_64& rng, int n_max) {
    return FamilyInstance::from_parameters(kind, complete_parameters(kind, {}, rng, n_max), n_max);
}

}  // namespace cgaskey
