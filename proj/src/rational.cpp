#include "seacalc/rational.hpp"

#include <stdexcept>

namespace seacalc {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text), BigInt(1));
    }
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den <= 0) {
        throw std::invalid_argument("rational denominator must be positive: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    const BigInt den = denominator();
    if (den == 1) {
        return numerator().str();
    }
    return numerator().str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace seacalc
