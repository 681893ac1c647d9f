#include "seacalc/pk_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace seacalc {

PkPoly identity_poly(int order) { return PkPoly(order, PkWord{Letter::P}, Coefficient(1)); }

PkPoly monomial(std::string_view word, const Coefficient& c, int order) {
    return PkPoly(order, PkWord::parse(word), c);
}

PkPoly poly_add(const PkPoly& a, const PkPoly& b) { return a + b; }

PkPoly poly_mul(const PkPoly& a, const PkPoly& b) {
    const int order = std::min(a.order(), b.order());
    PkPoly out(order);
    for (const auto& [wa, ca] : a.terms()) {
        if (wa.degree() > order) continue;
        for (const auto& [wb, cb] : b.terms()) {
            if (wa.degree() + wb.degree() > order) continue;
            out.add(word_mul(wa, wb), ca * cb);
        }
    }
    return out;
}

PkPoly poly_pow(const PkPoly& a, int n, int order) {
    if (n < 0) {
        throw std::invalid_argument("poly_pow: exponent must be >= 0");
    }
    const int cap = std::min(order, a.order());
    PkPoly out = identity_poly(cap);
    const PkPoly base = a.truncated(cap);
    for (int i = 0; i < n && !out.is_zero(); ++i) {
        out = out * base;
    }
    return out;
}

PkPoly apply_power_series(const std::function<Rational(int)>& coeff, const Rational& const_term,
                          const PkPoly& arg, int order) {
    const int cap = std::min(order, arg.order());
    for (const auto& [w, c] : arg.terms()) {
        if (w.degree() == 0) {
            throw std::invalid_argument("apply_power_series: argument has a degree-0 term '" + w.str() +
                                        "'; the series would not terminate");
        }
    }
    PkPoly out = identity_poly(cap).scaled(Coefficient(const_term));
    const PkPoly base = arg.truncated(cap);
    PkPoly power = identity_poly(cap);
    for (int n = 1;; ++n) {
        power = power * base;
        if (power.is_zero()) break;
        out += power.scaled(Coefficient(coeff(n)));
    }
    return out;
}

PkPoly replace_p_by_k(const PkPoly& poly) {
    PkPoly out(poly.order());
    for (const auto& [w, c] : poly.terms()) {
        std::vector<Letter> letters(w.size(), Letter::K);
        out.add(PkWord(std::move(letters)), c);
    }
    return out;
}

}  // namespace seacalc
