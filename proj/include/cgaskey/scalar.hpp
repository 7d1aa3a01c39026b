#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cgaskey {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(int value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class value);

    /// Parses "a/b" or an integer literal; throws ParseError.
    static Scalar parse(std::string_view text);

    /// "num/den", den omitted when 1.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Integer powers, negative exponents included. Throws SingularParameter for 0^-k.
    [[nodiscard]] Scalar pow(long exponent) const;
    [[nodiscard]] Scalar abs() const;
    [[nodiscard]] Scalar inverse() const;

    /// Exact square root when one exists in Q.
    [[nodiscard]] bool rational_sqrt(Scalar& root) const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    /// Throws SingularParameter on division by zero.
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& lhs, const Scalar& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

/// num / den, throwing SingularParameter that names `what` when den is zero.
Scalar checked_div(const Scalar& num, const Scalar& den, std::string_view what);

}  // namespace cgaskey
