#pragma once

#include "seacalc/coefficient.hpp"
#include "seacalc/rational.hpp"

// Closed-form combinatorial coefficients of the perturbation series.
namespace seacalc {

/// n!! with (-1)!! = 0!! = 1. Throws std::invalid_argument for n < -1.
BigInt double_factorial(int n);
BigInt factorial(int n);
/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Taylor coefficients of sqrt(1 + x): (-1)^(n+1) (2n-3)!! / (n! 2^n), n >= 1.
Rational sqrt_coefficient(int n);
/// Taylor coefficients of (1 + x)^(-1/2): (-1)^n (2n-1)!! / (2^n n!), with the n = 0 term equal to 1.
Rational inv_sqrt_coefficient(int n);

/// f_{l,r} = sum_{n=l}^{r} e_n C(n,l) (-1)^(n-l).
Rational f_lr_summation(int l, int r);
/// f_{l,r} = (-1)^l / l! * (2r+1)!! / (2^r (2l+1) (r-l)!).
Rational f_lr_closed(int l, int r);
/// Both forms; throws std::logic_error if they ever disagree.
Rational f_lr(int l, int r);

/// Gamma(r - rho + 1/2) / (Gamma(-rho + 1/2) r!) by the half-integer recurrence.
Rational gamma_ratio_half(int r, int rho);
/// pi^(2r) * gamma_ratio_half(r, rho).
Coefficient c_r_rho(int r, int rho);

}  // namespace seacalc
