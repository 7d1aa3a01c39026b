#include "cgaskey/report.hpp"

namespace cgaskey {

bool Report::passed() const {
    for (const auto& c : checks) {
        if (!c.passed()) return false;
    }
    return true;
}

std::size_t Report::identities() const {
    std::size_t total = 0;
    for (const auto& c : checks) total += c.identities;
    return total;
}

const Check* Report::first_failure() const {
    for (const auto& c : checks) {
        if (!c.passed()) return &c;
    }
    return nullptr;
}

void Report::append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

CheckRecorder::CheckRecorder(std::string name, std::string checked_range) {
    check_.name = std::move(name);
    check_.checked_range = std::move(checked_range);
}

bool CheckRecorder::expect_equal(const Scalar& lhs, const Scalar& rhs,
                                 std::initializer_list<std::pair<const char*, long>> indices, std::string detail) {
    const bool holds = lhs == rhs;
    if (holds) {
        ++check_.identities;
        return true;
    }
    return expect(false, indices, lhs.str(), rhs.str(), std::move(detail));
}

bool CheckRecorder::expect(bool holds, std::initializer_list<std::pair<const char*, long>> indices, std::string lhs,
                           std::string rhs, std::string detail) {
    ++check_.identities;
    if (holds) return true;
    if (check_.status != CheckStatus::Fail) {
        check_.status = CheckStatus::Fail;
        Witness w;
        for (const auto& [k, v] : indices) w.indices.emplace_back(k, v);
        w.lhs = std::move(lhs);
        w.rhs = std::move(rhs);
        w.detail = std::move(detail);
        check_.witness = std::move(w);
    }
    return false;
}

Check skipped_check(std::string name, std::string reason) {
    Check c;
    c.name = std::move(name);
    c.status = CheckStatus::Skipped;
    c.note = std::move(reason);
    return c;
}

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

}  // namespace cgaskey
