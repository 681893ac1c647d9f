#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace seacalc {

/// Letters of operator words. Ordering p < k < s is the canonical ordering.
enum class Letter : std::uint8_t { P = 0, K = 1, S = 2 };

char letter_char(Letter l);

/// Inner (fixed-mass) layer: letters p, k joined by b-lines.
struct PkLayer {
    static constexpr char separator = 'b';
    static constexpr bool allows_s = false;
    static constexpr std::string_view name = "pk";
};

/// Expanded layer: letters p, k, s joined by factors of the potential (written B).
struct BLayer {
    static constexpr char separator = 'B';
    static constexpr bool allows_s = true;
    static constexpr std::string_view name = "b";
};

/// Non-empty letter sequence; adjacent letters are joined by one separator,
/// so degree() == size() - 1.
template <class Layer>
class Word {
public:
    using layer_type = Layer;

    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    /// Parses text like "pbkbp" (pk layer) or "sBkBs" (B layer).
    static Word parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    int degree() const { return static_cast<int>(letters_.size()) - 1; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }
    int count(Letter l) const;

    std::string str() const;

    /// Canonical order: shorter first, then lexicographic with p < k < s.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size()) {
            return a.letters_.size() <=> b.letters_.size();
        }
        for (std::size_t i = 0; i < a.letters_.size(); ++i) {
            if (a.letters_[i] != b.letters_[i]) {
                return a.letters_[i] <=> b.letters_[i];
            }
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
};

using PkWord = Word<PkLayer>;
using BWord = Word<BLayer>;

/// Product in the fixed-mass algebra: concatenation with the two junction
/// letters contracted by p.p = k.k = p, p.k = k.p = k.
PkWord word_mul(const PkWord& a, const PkWord& b);
inline PkWord operator*(const PkWord& a, const PkWord& b) { return word_mul(a, b); }

/// Contraction of two single letters (the group Z_2 with p the identity).
Letter contract(Letter a, Letter b);

template <class Layer>
std::ostream& operator<<(std::ostream& os, const Word<Layer>& w) {
    return os << w.str();
}

extern template class Word<PkLayer>;
extern template class Word<BLayer>;

}  // namespace seacalc
