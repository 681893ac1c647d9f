#include "seacalc/b_expansion.hpp"

#include <stdexcept>
#include <string>

namespace seacalc {

namespace {

// Distributes `budget` extra s letters over the slots and emits one word per
// distribution. Slot 0 / last are the wrapper slots when wrapped.
void distribute(const std::vector<Letter>& core, bool wrapped, int budget, std::vector<int>& counts,
                std::size_t slot, const Coefficient& c, BPoly& out) {
    if (slot == counts.size()) {
        std::vector<Letter> letters;
        int total = 0;
        std::size_t s = 0;
        auto emit_s = [&](int n) {
            for (int i = 0; i < n; ++i) letters.push_back(Letter::S);
            total += n;
        };
        if (wrapped) emit_s(counts[s++]);
        letters.push_back(core.front());
        for (std::size_t i = 1; i < core.size(); ++i) {
            emit_s(counts[s++]);
            letters.push_back(core[i]);
        }
        if (wrapped) emit_s(counts[s++]);
        out.add(BWord(std::move(letters)), total % 2 == 0 ? c : -c);
        return;
    }
    for (int n = 0; n <= budget; ++n) {
        counts[slot] = n;
        distribute(core, wrapped, budget - n, counts, slot + 1, c, out);
    }
    counts[slot] = 0;
}

}  // namespace

BPoly expand_core(const PkPoly& core, int order, bool wrapped) {
    BPoly out(order);
    for (const auto& [word, c] : core.terms()) {
        const int budget = order - word.degree();
        if (budget < 0) continue;
        const std::size_t slots = word.size() - 1 + (wrapped ? 2 : 0);
        std::vector<int> counts(slots, 0);
        distribute(word.letters(), wrapped, budget, counts, 0, c, out);
    }
    return out;
}

BPoly expand_named(const SeriesBuilder& builder, SeriesId id, int order) {
    const bool wrapped = canonical_wrapper(id) != Wrapper::None;
    return expand_core(builder.canonical(id, order), order, wrapped);
}

BPoly expand_direct(const SeriesBuilder& builder, SeriesId id, int order) {
    switch (id) {
        case SeriesId::Ktilde: return expand_core(builder.ktilde_direct(order), order, true);
        case SeriesId::PtildeRes: return expand_core(builder.pres_direct(order), order, true);
        default:
            throw std::invalid_argument("no direct expansion route for series " + std::string(series_name(id)));
    }
}

BPoly replace_p_by_k(const BPoly& poly) {
    BPoly out(poly.order());
    for (const auto& [w, c] : poly.terms()) {
        std::vector<Letter> letters = w.letters();
        for (Letter& l : letters) {
            if (l == Letter::P) l = Letter::K;
        }
        out.add(BWord(std::move(letters)), c);
    }
    return out;
}

}  // namespace seacalc
