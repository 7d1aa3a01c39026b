#include "cgaskey/suite.hpp"

#include <algorithm>
#include <array>

#include "cgaskey/clebsch_gordan.hpp"
#include "cgaskey/coproduct.hpp"
#include "cgaskey/errors.hpp"
#include "cgaskey/representation.hpp"

namespace cgaskey {

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "contiguity",    "three-term", "relations",  "casimir",       "homomorphism", "algebraic-form",
        "cg-invertible", "cg-raising", "cg-lowering", "cg-oracle",    "orthogonality", "weight-grading",
        "standard-sl2",  "twist",      "limit"};
    return names;
}

namespace {

Report skipped(const std::string& name, const std::string& reason) { return {name, {skipped_check(name, reason)}}; }

bool is_standard_dual_hahn(const FamilyInstance& inst) {
    return inst.kind() == FamilyKind::DualHahn && inst.alpha() == inst.label1() - Scalar(1);
}

Report casimir_report(const FamilyInstance& inst) {
    Report out{"casimir", {}};
    const std::array<Scalar, 2> labels{inst.label1(), inst.label2()};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const ModuleSpec module{inst.algebra(), labels[i], inst.n_max()};
        const auto res = casimir(module);
        const std::string which = "module " + std::to_string(i + 1);
        CheckRecorder rec("casimir scalar, " + which, "levels 0.." + std::to_string(module.levels));
        for (int N : res.op.levels()) {
            rec.expect_equal(res.op.block(N)(0, 0), res.eigenvalue, {{"level", N}}, "C vs eigenvalue");
        }
        out.checks.push_back(rec.finish());
        for (auto c : check_casimir_central(module).checks) {
            c.name += ", " + which;
            out.checks.push_back(std::move(c));
        }
    }
    return out;
}

Report relations_report(const FamilyInstance& inst) {
    Report out{"relations", {}};
    const std::array<Scalar, 2> labels{inst.label1(), inst.label2()};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (auto c : check_relations(ModuleSpec{inst.algebra(), labels[i], inst.n_max()}).checks) {
            c.name += ", module " + std::to_string(i + 1);
            out.checks.push_back(std::move(c));
        }
    }
    return out;
}

Report limit_report(const FamilyInstance& inst) {
    const std::vector<Scalar> scales{Scalar(1000), Scalar(1000000)};
    const int top = std::min(inst.n_max(), 4);
    if (inst.kind() == FamilyKind::Krawtchouk) {
        Report out{"limit", {}};
        for (int N = 0; N <= top; ++N) {
            for (int k = 0; k <= N; ++k) {
                for (int n = 0; n <= N; ++n) {
                    for (auto c : limit_hahn_to_krawtchouk(inst.p(), scales, n, k, N).checks) {
                        c.name = "hahn->krawtchouk " + c.name;
                        c.checked_range = "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",N=" + std::to_string(N);
                        out.checks.push_back(std::move(c));
                    }
                }
            }
        }
        return out;
    }
    if (inst.kind() == FamilyKind::DualHahn) {
        auto r = limit_racah_to_dual_hahn(inst.alpha(), inst.label1(), inst.label2(), scales, top);
        r.name = "limit";
        return r;
    }
    return skipped("limit", "limits are checked from krawtchouk and dual-hahn instances");
}

}  // namespace

Report run_check(const std::string& name, const FamilyInstance& inst) {
    const auto tm = TensorModule::for_family(inst);
    const int n_max = inst.n_max();
    if (name == "contiguity") return check_contiguity(inst);
    if (name == "three-term") {
        if (!is_standard_dual_hahn(inst)) return skipped(name, "needs dual-hahn with alpha = lambda1 - 1");
        auto r = check_three_term_dual_hahn(inst);
        r.name = name;
        return r;
    }
    if (name == "relations") return relations_report(inst);
    if (name == "casimir") return casimir_report(inst);
    if (name == "homomorphism") return check_homomorphism(inst, tm);
    if (name == "algebraic-form") return check_algebraic_form(inst, tm);
    if (name == "cg-invertible") return verify_invertible(inst);
    if (name == "cg-raising" || name == "cg-lowering") {
        const bool raising = name == "cg-raising";
        if (n_max < 1) return skipped(name, "needs n_max >= 1");
        const auto delta = build_delta(inst, tm);
        const auto poly = poly_function(inst);
        Report out{name, {}};
        for (int N = raising ? 0 : 1; N <= (raising ? n_max - 1 : n_max); ++N) {
            auto r = raising ? verify_raising(delta, poly, N)
                             : verify_lowering(inst.algebra(), inst.label1(), inst.label2(), delta, poly, N);
            out.append(r);
        }
        return out;
    }
    if (name == "cg-oracle") return verify_oracle(inst, tm);
    if (name == "orthogonality") return verify_orthogonality(inst);
    if (name == "weight-grading") return verify_weight_grading(inst, tm);
    if (name == "standard-sl2") {
        if (!is_standard_dual_hahn(inst)) return skipped(name, "needs dual-hahn with alpha = lambda1 - 1");
        auto r = check_standard_sl2_specialization(inst.label1(), inst.label2(), n_max);
        r.name = name;
        return r;
    }
    if (name == "twist") {
        if (inst.kind() != FamilyKind::QRacah || !inst.beta().is_zero() ||
            inst.alpha() != inst.label1() * inst.label1() / inst.q()) {
            return skipped(name, "needs q-racah with beta = 0 and alpha = kappa1^2/q");
        }
        auto r = check_twist_qracah_specialization(inst.q(), inst.label1(), inst.label2(), n_max);
        r.name = name;
        return r;
    }
    if (name == "limit") return limit_report(inst);
    throw ParseError("unknown check '" + name + "'");
}

Report run_suite(const FamilyInstance& inst, const std::vector<std::string>& selected) {
    const auto& names = check_names();
    for (const auto& s : selected) {
        if (std::find(names.begin(), names.end(), s) == names.end()) throw ParseError("unknown check '" + s + "'");
    }
    Report out{"verify", {}};
    for (const auto& name : names) {
        const bool wanted = selected.empty() || std::find(selected.begin(), selected.end(), name) != selected.end();
        Report r = wanted ? run_check(name, inst) : skipped(name, "not selected");
        for (auto& c : r.checks) {
            if (c.name != name) c.name = name + ": " + c.name;
        }
        out.append(r);
    }
    return out;
}

}  // namespace cgaskey
