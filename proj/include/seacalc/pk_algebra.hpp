#pragma once

#include <functional>

#include "seacalc/poly.hpp"

namespace seacalc {

/// The identity word p as a polynomial.
PkPoly identity_poly(int order);
PkPoly monomial(std::string_view word, const Coefficient& c, int order);

/// Sum of a and b, truncated at the smaller of the two orders.
PkPoly poly_add(const PkPoly& a, const PkPoly& b);

/// Bilinear extension of word_mul; truncated at min(a.order(), b.order()).
PkPoly poly_mul(const PkPoly& a, const PkPoly& b);
inline PkPoly operator*(const PkPoly& a, const PkPoly& b) { return poly_mul(a, b); }

/// a^n with a^0 = p, truncated at min(order, a.order()).
PkPoly poly_pow(const PkPoly& a, int n, int order);

/// const_term * p + sum_{n >= 1} coeff(n) * arg^n truncated at `order`.
/// `arg` must have no degree-0 words so that the sum terminates.
PkPoly apply_power_series(const std::function<Rational(int)>& coeff, const Rational& const_term,
                          const PkPoly& arg, int order);

/// Maps every letter p to k (coefficients of colliding words are summed).
PkPoly replace_p_by_k(const PkPoly& poly);

}  // namespace seacalc
