#include "seacalc/coefficient.hpp"

#include <sstream>
#include <stdexcept>

namespace seacalc {

namespace {

void check_exponent(int exponent) {
    if (exponent < 0 || exponent % 2 != 0) {
        throw std::logic_error("pi exponent must be even and non-negative, got " + std::to_string(exponent));
    }
}

}  // namespace

Coefficient::Coefficient(const Rational& value) {
    if (!value.is_zero()) {
        terms_.emplace(0, value);
    }
}

Coefficient Coefficient::pi_power(int exponent, const Rational& value) {
    check_exponent(exponent);
    Coefficient c;
    if (!value.is_zero()) {
        c.terms_.emplace(exponent, value);
    }
    return c;
}

Rational Coefficient::at(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Coefficient::accumulate(int exponent, const Rational& value) {
    check_exponent(exponent);
    if (value.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
    for (const auto& [e, v] : rhs.terms_) {
        accumulate(e, v);
    }
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
    for (const auto& [e, v] : rhs.terms_) {
        accumulate(e, -v);
    }
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
    Coefficient out;
    for (const auto& [e1, v1] : terms_) {
        for (const auto& [e2, v2] : rhs.terms_) {
            out.accumulate(e1 + e2, v1 * v2);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

Coefficient Coefficient::operator-() const {
    Coefficient out;
    for (const auto& [e, v] : terms_) {
        out.terms_.emplace(e, -v);
    }
    return out;
}

std::string Coefficient::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : terms_) {
        Rational mag = v.sign() < 0 ? -v : v;
        if (first) {
            if (v.sign() < 0) os << "-";
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) os << mag << " ";
        os << "pi^" << e;
    }
    return os.str();
}

Coefficient coeff_add(const Coefficient& a, const Coefficient& b) { return a + b; }
Coefficient coeff_mul(const Coefficient& a, const Coefficient& b) { return a * b; }

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.str(); }

}  // namespace seacalc
