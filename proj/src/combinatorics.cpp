#include "seacalc/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace seacalc {

BigInt double_factorial(int n) {
    if (n < -1) {
        throw std::invalid_argument("double_factorial: n must be >= -1, got " + std::to_string(n));
    }
    BigInt out = 1;
    for (int k = n; k > 1; k -= 2) {
        out *= k;
    }
    return out;
}

BigInt factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    BigInt out = 1;
    for (int k = 2; k <= n; ++k) {
        out *= k;
    }
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational sqrt_coefficient(int n) {
    if (n < 1) {
        throw std::invalid_argument("sqrt_coefficient: n must be >= 1, got " + std::to_string(n));
    }
    const BigInt den = factorial(n) * (BigInt(1) << n);
    const Rational mag(double_factorial(2 * n - 3), den);
    return (n % 2 == 1) ? mag : -mag;
}

Rational inv_sqrt_coefficient(int n) {
    if (n < 0) {
        throw std::invalid_argument("inv_sqrt_coefficient: n must be >= 0, got " + std::to_string(n));
    }
    if (n == 0) {
        return Rational(1);
    }
    const Rational mag(double_factorial(2 * n - 1), (BigInt(1) << n) * factorial(n));
    return (n % 2 == 0) ? mag : -mag;
}

namespace {

void check_lr(int l, int r) {
    if (l < 0 || l > r) {
        throw std::invalid_argument("f_lr: require 0 <= l <= r, got l=" + std::to_string(l) +
                                    " r=" + std::to_string(r));
    }
}

}  // namespace

Rational f_lr_summation(int l, int r) {
    check_lr(l, r);
    Rational sum;
    for (int n = l; n <= r; ++n) {
        Rational term = inv_sqrt_coefficient(n) * Rational(binomial(n, l), 1);
        sum += ((n - l) % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational f_lr_closed(int l, int r) {
    check_lr(l, r);
    const BigInt den = factorial(l) * (BigInt(1) << r) * BigInt(2 * l + 1) * factorial(r - l);
    const Rational mag(double_factorial(2 * r + 1), den);
    return (l % 2 == 0) ? mag : -mag;
}

Rational f_lr(int l, int r) {
    Rational sum = f_lr_summation(l, r);
    if (sum != f_lr_closed(l, r)) {
        throw std::logic_error("f_lr: summation and closed forms disagree at l=" + std::to_string(l) +
                               " r=" + std::to_string(r));
    }
    return sum;
}

Rational gamma_ratio_half(int r, int rho) {
    if (rho < 0 || rho > r) {
        throw std::invalid_argument("gamma_ratio_half: require 0 <= rho <= r, got r=" + std::to_string(r) +
                                    " rho=" + std::to_string(rho));
    }
    // Gamma(x + r) / Gamma(x) = x (x+1) ... (x+r-1) with x = 1/2 - rho.
    Rational ratio(1);
    for (int j = 0; j < r; ++j) {
        ratio *= Rational(BigInt(1 - 2 * rho + 2 * j), BigInt(2));
    }
    return ratio / Rational(factorial(r), 1);
}

Coefficient c_r_rho(int r, int rho) { return Coefficient::pi_power(2 * r, gamma_ratio_half(r, rho)); }

}  // namespace seacalc
