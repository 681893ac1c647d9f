#include <doctest.h>

#include <random>
#include <stdexcept>

#include "seacalc/coefficient.hpp"
#include "seacalc/combinatorics.hpp"
#include "seacalc/series.hpp"

using namespace seacalc;

namespace {

// Generalized binomial coefficient binom(a, n) for rational a.
Rational gen_binom(const Rational& a, int n) {
    Rational out(1);
    for (int j = 0; j < n; ++j) out = out * (a - Rational(j)) / Rational(j + 1);
    return out;
}

Rational half_integer_gamma_ratio(int r, int rho) {
    // Gamma(m + 1/2) = (2m-1)!! sqrt(pi) / 2^m,  Gamma(1/2 - m) = (-2)^m sqrt(pi) / (2m-1)!!
    const int m = r - rho;
    BigInt num = double_factorial(2 * m - 1) * double_factorial(2 * rho - 1);
    BigInt den = BigInt(1) << (m + rho);
    den *= factorial(r);
    Rational v(num, den);
    return rho % 2 == 0 ? v : -v;
}

}  // namespace

TEST_CASE("coefficient addition and multiplication") {
    const Coefficient half(Rational(1, 2));
    CHECK(coeff_add(half, half) == Coefficient(1));
    CHECK(coeff_add(Coefficient::pi_power(2), Coefficient::pi_power(2, Rational(-1))).is_zero());
    const Coefficient mixed = coeff_add(Coefficient(1), Coefficient::pi_power(2, Rational(-1, 2)));
    CHECK(mixed.terms().size() == 2);
    CHECK(mixed.at(0) == Rational(1));
    CHECK(mixed.at(2) == Rational(-1, 2));

    CHECK(coeff_mul(Coefficient::pi_power(2), Coefficient::pi_power(2)) == Coefficient::pi_power(4));
    CHECK(coeff_mul(Coefficient(-1), Coefficient::pi_power(2, Rational(1, 2))) ==
          Coefficient::pi_power(2, Rational(-1, 2)));
    CHECK(coeff_mul(Coefficient(2), half) == Coefficient(1));
}

TEST_CASE("coefficient rejects odd and negative pi powers") {
    CHECK_THROWS_AS(Coefficient::pi_power(1), std::logic_error);
    CHECK_THROWS_AS(Coefficient::pi_power(-2), std::logic_error);
    CHECK(Coefficient::pi_power(4, Rational(0)).is_zero());
}

TEST_CASE("coefficient ring laws on random values") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-6, 6);
    std::uniform_int_distribution<int> exp(0, 3);
    auto draw = [&] {
        Coefficient c;
        for (int i = 0; i < 3; ++i) c += Coefficient::pi_power(2 * exp(rng), Rational(val(rng)));
        return c;
    };
    for (int i = 0; i < 200; ++i) {
        const Coefficient a = draw(), b = draw(), c = draw();
        CHECK(coeff_mul(coeff_mul(a, b), c) == coeff_mul(a, coeff_mul(b, c)));
        CHECK(coeff_mul(a, coeff_add(b, c)) == coeff_add(coeff_mul(a, b), coeff_mul(a, c)));
        CHECK(coeff_mul(a, b) == coeff_mul(b, a));
        const Coefficient ab = coeff_mul(a, b);
        for (const auto& [e, v] : ab.terms()) {
            CHECK(e % 2 == 0);
            CHECK(!v.is_zero());
        }
    }
}

TEST_CASE("double factorial and binomial") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(3, 4) == 0);
}

TEST_CASE("series coefficients match the binomial series") {
    CHECK(sqrt_coefficient(1) == Rational(1, 2));
    CHECK(sqrt_coefficient(2) == Rational(-1, 8));
    CHECK(sqrt_coefficient(3) == Rational(1, 16));
    CHECK(inv_sqrt_coefficient(0) == Rational(1));
    CHECK(inv_sqrt_coefficient(1) == Rational(-1, 2));
    CHECK(inv_sqrt_coefficient(2) == Rational(3, 8));
    for (int n = 1; n <= 16; ++n) {
        CAPTURE(n);
        CHECK(sqrt_coefficient(n) == gen_binom(Rational(1, 2), n));
        CHECK(inv_sqrt_coefficient(n) == gen_binom(Rational(-1, 2), n));
    }
}

TEST_CASE("square of the sqrt series is 1 + x, square of the inverse is 1/(1+x)") {
    auto c = [](int n) { return n == 0 ? Rational(1) : sqrt_coefficient(n); };
    for (int n = 0; n <= 12; ++n) {
        Rational sq, isq;
        for (int m = 0; m <= n; ++m) {
            sq += c(m) * c(n - m);
            isq += inv_sqrt_coefficient(m) * inv_sqrt_coefficient(n - m);
        }
        CHECK(sq == Rational(n <= 1 ? 1 : 0));
        CHECK(isq == Rational(n % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("f_{l,r}") {
    CHECK(f_lr(0, 0) == Rational(1));
    CHECK(f_lr(0, 1) == Rational(3, 2));
    CHECK(f_lr(1, 1) == Rational(-1, 2));
    CHECK_THROWS(f_lr(2, 1));
    for (int r = 0; r <= 10; ++r) {
        for (int l = 0; l <= r; ++l) {
            Rational brute;
            for (int n = l; n <= r; ++n) {
                const Rational term = gen_binom(Rational(-1, 2), n) * Rational(binomial(n, l), 1);
                brute += (n - l) % 2 == 0 ? term : -term;
            }
            CHECK(f_lr_closed(l, r) == brute);
            CHECK(f_lr_summation(l, r) == brute);
        }
    }
}

TEST_CASE("gamma ratio and c(r, rho)") {
    CHECK(gamma_ratio_half(0, 0) == Rational(1));
    CHECK(gamma_ratio_half(1, 0) == Rational(1, 2));
    CHECK(gamma_ratio_half(1, 1) == Rational(-1, 2));
    for (int r = 0; r <= 8; ++r) {
        for (int rho = 0; rho <= r; ++rho) CHECK(gamma_ratio_half(r, rho) == half_integer_gamma_ratio(r, rho));
    }
    CHECK(c_r_rho(0, 0) == Coefficient(1));
    CHECK(c_r_rho(1, 0) == Coefficient::pi_power(2, Rational(1, 2)));
    CHECK(c_r_rho(1, 1) == Coefficient::pi_power(2, Rational(-1, 2)));
}

TEST_CASE("l-sum of f against binomials gives the gamma ratio") {
    for (int r = 0; r <= 6; ++r) {
        for (int rho = 0; rho <= r; ++rho) {
            Rational sum;
            for (int l = rho; l <= r; ++l) sum += f_lr(l, r) * Rational(binomial(r + l - rho, l - rho), 1);
            CHECK(sum == half_integer_gamma_ratio(r, rho));
        }
    }
}

TEST_CASE("sigma") {
    CHECK(sigma(1, 0, SubsetQ{}) == 7);
    CHECK(sigma(1, 1, SubsetQ({1, 2})) == 4);
    CHECK(sigma(0, 0, SubsetQ{}) == 2);
    CHECK_THROWS_AS(sigma(1, 1, SubsetQ({1})), std::invalid_argument);
    CHECK_THROWS_AS(sigma(1, 1, SubsetQ({1, 4})), std::invalid_argument);
    CHECK_THROWS_AS(sigma(1, 2, SubsetQ{}), std::invalid_argument);
    CHECK(subsets_of_size(4, 2).size() == 6);
    CHECK(subsets_of_size(3, 0).size() == 1);
    CHECK(subsets_of_size(3, 4).empty());
}

TEST_CASE("mutated tables flip exactly one value") {
    const CoefficientTable base;
    CHECK(CoefficientTable(Mutation::FlipC1).c(1) == -base.c(1));
    CHECK(CoefficientTable(Mutation::FlipC1).c(2) == base.c(2));
    CHECK(CoefficientTable(Mutation::FlipE1).e(1) == -base.e(1));
    CHECK(CoefficientTable(Mutation::FlipF11).f(1, 1) == -base.f(1, 1));
    CHECK(CoefficientTable(Mutation::FlipF11).f(1, 2) == base.f(1, 2));
    CHECK(CoefficientTable(Mutation::FlipC11).c_r_rho(1, 1) == -base.c_r_rho(1, 1));
    CHECK(CoefficientTable(Mutation::FlipSigmaParity).sigma_sign(0, 0, SubsetQ{}) == -1);
}
