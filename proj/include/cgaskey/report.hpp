#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgaskey/scalar.hpp"

namespace cgaskey {

/// Where an identity first failed: the grid indices and both exact sides.
struct Witness {
    std::vector<std::pair<std::string, long>> indices;
    std::string lhs;
    std::string rhs;
    std::string detail;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string checked_range;
    std::size_t identities = 0;
    std::optional<Witness> witness;
    /// Reason for a skip, or extra context.
    std::string note;

    [[nodiscard]] bool passed() const { return status != CheckStatus::Fail; }
};

/// A named group of checks. A report passes when none of its checks failed.
struct Report {
    std::string name;
    std::vector<Check> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::size_t identities() const;
    [[nodiscard]] const Check* first_failure() const;
    void append(const Report& other);
};

/// Accumulates exact comparisons for one check and keeps the first counterexample.
class CheckRecorder {
public:
    CheckRecorder(std::string name, std::string checked_range);

    /// Records lhs == rhs at the given indices. Returns whether it held.
    bool expect_equal(const Scalar& lhs, const Scalar& rhs,
                      std::initializer_list<std::pair<const char*, long>> indices, std::string detail = {});
    bool expect(bool holds, std::initializer_list<std::pair<const char*, long>> indices, std::string lhs = {},
                std::string rhs = {}, std::string detail = {});

    [[nodiscard]] bool ok() const { return check_.status != CheckStatus::Fail; }
    [[nodiscard]] Check finish() const { return check_; }

private:
    Check check_;
};

Check skipped_check(std::string name, std::string reason);

const char* to_string(CheckStatus status);

}  // namespace cgaskey
