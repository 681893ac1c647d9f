#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace seacalc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "n" or "n/d" (optional leading sign on the numerator).
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return value_ == 0; }
    int sign() const { return value_.sign(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

private:
    boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace seacalc
