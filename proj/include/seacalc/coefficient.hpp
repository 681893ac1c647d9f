#pragma once

#include <map>
#include <ostream>
#include <string>

#include "seacalc/rational.hpp"

namespace seacalc {

/// Element of Q[pi^2]: a finite map from even, non-negative pi exponents to
/// nonzero rationals. The empty map is zero.
class Coefficient {
public:
    using Terms = std::map<int, Rational>;

    Coefficient() = default;
    Coefficient(std::int64_t value) : Coefficient(Rational(value)) {}  // NOLINT
    Coefficient(const Rational& value);                                // NOLINT

    /// value * pi^exponent. Throws std::logic_error for odd or negative exponents.
    static Coefficient pi_power(int exponent, const Rational& value = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Rational multiplying pi^exponent (zero when absent).
    Rational at(int exponent) const;

    Coefficient& operator+=(const Coefficient& rhs);
    Coefficient& operator-=(const Coefficient& rhs);
    Coefficient& operator*=(const Coefficient& rhs);

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    Coefficient operator-() const;

    friend bool operator==(const Coefficient&, const Coefficient&) = default;

    /// Compact text such as "1/2", "-pi^2", "1/2 + 3 pi^4".
    std::string str() const;

private:
    void accumulate(int exponent, const Rational& value);

    Terms terms_;
};

Coefficient coeff_add(const Coefficient& a, const Coefficient& b);
Coefficient coeff_mul(const Coefficient& a, const Coefficient& b);

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

}  // namespace seacalc
