#include "cgaskey/scalar.hpp"

#include <cctype>
#include <ostream>
#include <string>

#include "cgaskey/errors.hpp"

namespace cgaskey {

namespace {

bool is_integer_literal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) : value_(numerator, denominator) {
    if (denominator == 0) throw SingularParameter("Scalar with zero denominator");
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw SingularParameter("Scalar with zero denominator");
    value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    const auto slash = text.find('/');
    std::string_view num = trim(text.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : trim(text.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw SingularParameter("zero raised to a negative power");
        return inverse().pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::abs() const {
    return sign() < 0 ? -*this : *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw SingularParameter("inverse of zero");
    return Scalar(mpq_class(1) / value_);
}

bool Scalar::rational_sqrt(Scalar& root) const {
    if (sign() < 0) return false;
    const mpz_class& num = value_.get_num();
    const mpz_class& den = value_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Scalar(mpq_class(rn, rd));
    return true;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    value_ += other.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    value_ -= other.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    value_ *= other.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    if (other.is_zero()) throw SingularParameter("division by zero");
    value_ /= other.value_;
    return *this;
}

Scalar Scalar::operator-() const {
    return Scalar(mpq_class(-value_));
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) {
    return os << value.str();
}

Scalar checked_div(const Scalar& num, const Scalar& den, std::string_view what) {
    if (den.is_zero()) throw SingularParameter("vanishing denominator: " + std::string(what));
    return num / den;
}

}  // namespace cgaskey
