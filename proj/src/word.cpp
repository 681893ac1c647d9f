#include "seacalc/word.hpp"

#include <stdexcept>

namespace seacalc {

char letter_char(Letter l) {
    switch (l) {
        case Letter::P: return 'p';
        case Letter::K: return 'k';
        case Letter::S: return 's';
    }
    return '?';
}

template <class Layer>
Word<Layer>::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("operator word must be non-empty");
    }
    if constexpr (!Layer::allows_s) {
        for (Letter l : letters_) {
            if (l == Letter::S) {
                throw std::invalid_argument("letter s is not allowed in the pk layer");
            }
        }
    }
}

template <class Layer>
Word<Layer> Word<Layer>::parse(std::string_view text) {
    auto fail = [&](const std::string& why) {
        return std::invalid_argument("malformed " + std::string(Layer::name) + " word '" + std::string(text) +
                                     "': " + why);
    };
    if (text.empty() || text.size() % 2 == 0) {
        throw fail("expected letters alternating with '" + std::string(1, Layer::separator) + "'");
    }
    std::vector<Letter> letters;
    letters.reserve(text.size() / 2 + 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (i % 2 == 1) {
            if (c != Layer::separator) {
                throw fail("expected separator '" + std::string(1, Layer::separator) + "' at position " +
                           std::to_string(i));
            }
            continue;
        }
        switch (c) {
            case 'p': letters.push_back(Letter::P); break;
            case 'k': letters.push_back(Letter::K); break;
            case 's':
                if (!Layer::allows_s) throw fail("letter s is not allowed in this layer");
                letters.push_back(Letter::S);
                break;
            default: throw fail("unknown letter '" + std::string(1, c) + "'");
        }
    }
    return Word(std::move(letters));
}

template <class Layer>
int Word<Layer>::count(Letter l) const {
    int n = 0;
    for (Letter x : letters_) n += (x == l);
    return n;
}

template <class Layer>
std::string Word<Layer>::str() const {
    std::string out;
    out.reserve(2 * letters_.size());
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out.push_back(Layer::separator);
        out.push_back(letter_char(letters_[i]));
    }
    return out;
}

template class Word<PkLayer>;
template class Word<BLayer>;

Letter contract(Letter a, Letter b) {
    if (a == Letter::S || b == Letter::S) {
        throw std::logic_error("contract: s letters have no fixed-mass product");
    }
    return a == b ? Letter::P : Letter::K;
}

PkWord word_mul(const PkWord& a, const PkWord& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size() - 1);
    out.insert(out.end(), a.letters().begin(), a.letters().end() - 1);
    out.push_back(contract(a.back(), b.front()));
    out.insert(out.end(), b.letters().begin() + 1, b.letters().end());
    return PkWord(std::move(out));
}

}  // namespace seacalc
