#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "seacalc/coefficient.hpp"
#include "seacalc/word.hpp"

namespace seacalc {

/// Finite linear combination of words with exact coefficients, truncated at a
/// maximum word degree. Zero coefficients are never stored.
template <class W>
class Poly {
public:
    using word_type = W;
    using Terms = std::map<W, Coefficient>;

    explicit Poly(int truncation_order) : order_(truncation_order) {
        if (order_ < 0) {
            throw std::invalid_argument("truncation order must be >= 0, got " + std::to_string(order_));
        }
    }
    Poly(int truncation_order, const W& word, const Coefficient& c) : Poly(truncation_order) { add(word, c); }

    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of `word` (zero if absent).
    Coefficient at(const W& word) const {
        const auto it = terms_.find(word);
        return it == terms_.end() ? Coefficient() : it->second;
    }

    /// Adds c * word; words beyond the truncation order are dropped.
    void add(const W& word, const Coefficient& c) {
        if (word.degree() > order_ || c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(word, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    /// Smallest degree of a stored word; -1 for the zero polynomial.
    int min_degree() const {
        int best = -1;
        for (const auto& [w, c] : terms_) {
            if (best < 0 || w.degree() < best) best = w.degree();
        }
        return best;
    }

    Poly truncated(int new_order) const {
        Poly out(std::min(new_order, order_));
        for (const auto& [w, c] : terms_) out.add(w, c);
        return out;
    }

    Poly scaled(const Coefficient& factor) const {
        Poly out(order_);
        for (const auto& [w, c] : terms_) out.add(w, c * factor);
        return out;
    }

    Poly& operator+=(const Poly& rhs) {
        *this = truncated(rhs.order_);
        for (const auto& [w, c] : rhs.terms_) add(w, c);
        return *this;
    }
    Poly& operator-=(const Poly& rhs) {
        *this = truncated(rhs.order_);
        for (const auto& [w, c] : rhs.terms_) add(w, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const { return scaled(Coefficient(-1)); }

    /// Equality of terms and truncation order.
    friend bool operator==(const Poly& a, const Poly& b) { return a.order_ == b.order_ && a.terms_ == b.terms_; }

    /// Term equality ignoring truncation order.
    bool same_terms(const Poly& other) const { return terms_ == other.terms_; }

private:
    int order_;
    Terms terms_;
};

using PkPoly = Poly<PkWord>;
using BPoly = Poly<BWord>;

}  // namespace seacalc
