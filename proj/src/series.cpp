#include "seacalc/series.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "seacalc/combinatorics.hpp"

namespace seacalc {

namespace {

struct SeriesInfo {
    SeriesId id;
    std::string_view name;
    Wrapper canonical;
};

constexpr std::array<SeriesInfo, 13> kSeries{{
    {SeriesId::A, "A", Wrapper::None},
    {SeriesId::X, "X", Wrapper::None},
    {SeriesId::U, "U", Wrapper::None},
    {SeriesId::Ktilde, "Ktilde", Wrapper::Plain},
    {SeriesId::Ptilde, "Ptilde", Wrapper::Plain},
    {SeriesId::PtildeY, "PtildeY", Wrapper::None},
    {SeriesId::Y, "Y", Wrapper::None},
    {SeriesId::Ttilde, "Ttilde", Wrapper::Plain},
    {SeriesId::P, "P", Wrapper::Plain},
    {SeriesId::KtildeResFlow, "KtildeRes_flow", Wrapper::Plain},
    {SeriesId::KtildeResClosed, "KtildeRes_closed", Wrapper::Plain},
    {SeriesId::PtildeRes, "PtildeRes", Wrapper::Plain},
    {SeriesId::Phe, "Phe", Wrapper::Plain},
}};

const SeriesInfo& info(SeriesId id) {
    for (const auto& s : kSeries) {
        if (s.id == id) return s;
    }
    throw std::logic_error("unknown series id");
}

PkPoly k_power_word(int beta, int order, const Coefficient& c) {
    // k (bk)^(2 beta)
    return PkPoly(order, PkWord(std::vector<Letter>(2 * beta + 1, Letter::K)), c);
}

Coefficient minus_pi2_pow(int beta) {
    return Coefficient::pi_power(2 * beta, Rational(beta % 2 == 0 ? 1 : -1));
}

}  // namespace

const std::vector<SeriesId>& all_series() {
    static const std::vector<SeriesId> ids = [] {
        std::vector<SeriesId> out;
        for (const auto& s : kSeries) out.push_back(s.id);
        return out;
    }();
    return ids;
}

std::string_view series_name(SeriesId id) { return info(id).name; }

std::optional<SeriesId> parse_series_id(std::string_view name) {
    if (name == "KtildeRes") return SeriesId::KtildeResClosed;
    for (const auto& s : kSeries) {
        if (s.name == name) return s.id;
    }
    return std::nullopt;
}

Wrapper canonical_wrapper(SeriesId id) { return info(id).canonical; }

Wrapper native_wrapper(SeriesId id) {
    switch (id) {
        case SeriesId::Ktilde:
        case SeriesId::Ptilde:
        case SeriesId::Ttilde:
        case SeriesId::P:
        case SeriesId::KtildeResFlow: return Wrapper::Checked;
        default: return canonical_wrapper(id);
    }
}

const std::vector<Mutation>& all_mutations() {
    static const std::vector<Mutation> m{Mutation::FlipC1, Mutation::FlipE1, Mutation::FlipF11, Mutation::FlipC11,
                                         Mutation::FlipSigmaParity};
    return m;
}

std::string_view mutation_name(Mutation m) {
    switch (m) {
        case Mutation::None: return "none";
        case Mutation::FlipC1: return "flip-c1";
        case Mutation::FlipE1: return "flip-e1";
        case Mutation::FlipF11: return "flip-f11";
        case Mutation::FlipC11: return "flip-c(1,1)";
        case Mutation::FlipSigmaParity: return "flip-sigma-parity";
    }
    return "?";
}

long sigma(int r, int rho, const SubsetQ& q) {
    const int n = 2 * r + 1;
    if (r < 0 || rho < 0 || rho > r) {
        throw std::invalid_argument("sigma: require 0 <= rho <= r");
    }
    if (q.size() != static_cast<std::size_t>(2 * rho)) {
        throw std::invalid_argument("sigma: #Q must equal 2 rho = " + std::to_string(2 * rho) + ", got " +
                                    std::to_string(q.size()));
    }
    for (int x : q.members()) {
        if (x < 1 || x > n) {
            throw std::invalid_argument("sigma: element " + std::to_string(x) + " outside {1, ..., " +
                                        std::to_string(n) + "}");
        }
    }
    long s = 1;
    for (int x = 1; x <= n; ++x) {
        if (!q.contains(x)) s += x;
    }
    return s;
}

std::vector<SubsetQ> subsets_of_size(int n, int size) {
    std::vector<SubsetQ> out;
    if (size < 0 || size > n) return out;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i + 1;
    while (true) {
        out.emplace_back(std::set<int>(idx.begin(), idx.end()));
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Rational CoefficientTable::c(int n) const {
    Rational v = sqrt_coefficient(n);
    return (mutation_ == Mutation::FlipC1 && n == 1) ? -v : v;
}

Rational CoefficientTable::e(int n) const {
    Rational v = inv_sqrt_coefficient(n);
    return (mutation_ == Mutation::FlipE1 && n == 1) ? -v : v;
}

Rational CoefficientTable::f(int l, int r) const {
    Rational v = f_lr_closed(l, r);
    return (mutation_ == Mutation::FlipF11 && l == 1 && r == 1) ? -v : v;
}

Coefficient CoefficientTable::c_r_rho(int r, int rho) const {
    Coefficient v = seacalc::c_r_rho(r, rho);
    return (mutation_ == Mutation::FlipC11 && r == 1 && rho == 1) ? -v : v;
}

int CoefficientTable::sigma_sign(int r, int rho, const SubsetQ& q) const {
    long s = sigma(r, rho, q);
    if (mutation_ == Mutation::FlipSigmaParity) ++s;
    return s % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------

PkPoly SeriesBuilder::pbpbp(int order) const { return monomial("pbpbp", Coefficient::pi_power(2), order); }

PkPoly SeriesBuilder::junction(int order) const { return identity_poly(order) + pbpbp(order); }

PkPoly SeriesBuilder::normalizer(int order) const {
    return apply_power_series([this](int n) { return table_.e(n); }, Rational(1), pbpbp(order), order);
}

PkPoly SeriesBuilder::k_chain(int order) const {
    PkPoly out(order);
    for (int beta = 0; 2 * beta <= order; ++beta) {
        out += k_power_word(beta, order, minus_pi2_pow(beta));
    }
    return out;
}

PkPoly SeriesBuilder::p_chain(int order) const {
    PkPoly out(order);
    for (int beta = 0; 2 * beta <= order; ++beta) {
        out.add(PkWord(std::vector<Letter>(2 * beta + 1, Letter::P)), minus_pi2_pow(beta));
    }
    return out;
}

PkPoly SeriesBuilder::to_plain(const PkPoly& checked_core) const {
    const PkPoly n = normalizer(checked_core.order());
    return n * checked_core * n;
}

PkPoly SeriesBuilder::plain_product(const PkPoly& a, const PkPoly& b) const {
    return a * junction(std::min(a.order(), b.order())) * b;
}

PkPoly SeriesBuilder::series_A(int order) const {
    return apply_power_series([this](int n) { return table_.c(n); }, Rational(0), pbpbp(order), order);
}

PkPoly SeriesBuilder::series_U(int order) const {
    const PkPoly pa = identity_poly(order) + series_A(order);
    const PkPoly chain = k_chain(order);
    return pa * chain * (pa * pa) * chain * pa;
}

PkPoly SeriesBuilder::series_X(int order) const {
    PkPoly x = series_U(order) - identity_poly(order);
    if (!x.is_zero() && x.min_degree() < 2) {
        throw std::logic_error("series_X: term of b-degree < 2 survived");
    }
    return x;
}

PkPoly SeriesBuilder::ktilde_checked(int order) const {
    const PkPoly pa = identity_poly(order) + series_A(order);
    return pa * k_chain(order) * pa;
}

PkPoly SeriesBuilder::ktilde_direct(int order) const { return k_chain(order); }

PkPoly SeriesBuilder::ptilde_checked(int order) const {
    return apply_power_series([this](int n) { return table_.c(n); }, Rational(1), series_X(order), order);
}

PkPoly SeriesBuilder::series_Y(int order) const {
    return apply_power_series([](int n) { return Rational(n % 2 == 0 ? 1 : -1); }, Rational(1), series_X(order),
                              order);
}

PkPoly SeriesBuilder::series_ptildeY(int order) const {
    return apply_power_series([this](int n) { return table_.e(n); }, table_.e(0), series_X(order), order);
}

PkPoly SeriesBuilder::t_checked(int order) const {
    return (ptilde_checked(order) - ktilde_checked(order)).scaled(Rational(1, 2));
}

PkPoly SeriesBuilder::P_checked(int order) const {
    return (identity_poly(order) - series_ptildeY(order) * ktilde_checked(order)).scaled(Rational(1, 2));
}

PkPoly SeriesBuilder::P_checked_tYt(int order) const {
    const PkPoly t = t_checked(order);
    return t * series_Y(order) * t;
}

PkPoly SeriesBuilder::P_from_res(int order) const {
    return (pres_direct(order) - kres_closed(order)).scaled(Rational(1, 2));
}

PkPoly SeriesBuilder::G(int r, int rho) const {
    if (rho < 0 || rho > r) {
        throw std::invalid_argument("G: require 0 <= rho <= r");
    }
    const int n = 2 * r + 1;
    PkPoly out(2 * r);
    for (const SubsetQ& q : subsets_of_size(n, 2 * rho)) {
        std::vector<Letter> letters;
        letters.reserve(n);
        for (int i = 1; i <= n; ++i) letters.push_back(q.contains(i) ? Letter::P : Letter::K);
        out.add(PkWord(std::move(letters)), Coefficient(table_.sigma_sign(r, rho, q)));
    }
    return out;
}

PkPoly SeriesBuilder::kres_closed(int order) const {
    PkPoly out(order);
    for (int r = 0; 2 * r <= order; ++r) {
        for (int rho = 0; rho <= r; ++rho) {
            const PkPoly g = G(r, rho);
            for (const auto& [w, c] : g.terms()) {
                out.add(w, c * table_.c_r_rho(r, rho));
            }
        }
    }
    return out;
}

PkPoly SeriesBuilder::kres_flow_checked(int order) const {
    const PkPoly kt = ktilde_checked(order);
    const PkPoly x = series_X(order);
    PkPoly out(order);
    PkPoly term = kt;  // ktilde X^n
    for (int n = 0; !term.is_zero(); ++n) {
        out += term.scaled(Coefficient(table_.e(n)));
        term = term * x;
    }
    return out;
}

PkPoly SeriesBuilder::kres_flow(int order) const { return to_plain(kres_flow_checked(order)); }

PkPoly SeriesBuilder::S_l(int l, int order) const {
    if (l < 0) {
        throw std::invalid_argument("S_l: l must be >= 0");
    }
    const PkPoly chain = k_chain(order);
    const PkPoly bracket = chain * junction(order);
    return poly_pow(bracket, 2 * l, order) * chain;
}

PkPoly SeriesBuilder::kres_from_S(int order) const {
    const int r = order / 2;
    PkPoly out(order);
    for (int l = 0; l <= r; ++l) {
        out += S_l(l, order).scaled(Coefficient(table_.f(l, r)));
    }
    return out;
}

PkPoly SeriesBuilder::pres_direct(int order) const { return p_chain(order); }

PkPoly SeriesBuilder::pres_from_normalizer(int order) const { return to_plain(identity_poly(order)); }

PkPoly SeriesBuilder::Phe_from_difference(int order) const {
    const PkPoly p_res = (pres_direct(order) - ktilde_direct(order)).scaled(Rational(1, 2));
    return to_plain(P_checked(order)) - p_res;
}

PkPoly SeriesBuilder::Phe_closed(int order) const {
    return (ktilde_direct(order) - kres_closed(order)).scaled(Rational(1, 2));
}

PkPoly SeriesBuilder::build(SeriesId id, int order) const {
    switch (id) {
        case SeriesId::A: return series_A(order);
        case SeriesId::X: return series_X(order);
        case SeriesId::U: return series_U(order);
        case SeriesId::Ktilde: return ktilde_checked(order);
        case SeriesId::Ptilde: return ptilde_checked(order);
        case SeriesId::PtildeY: return series_ptildeY(order);
        case SeriesId::Y: return series_Y(order);
        case SeriesId::Ttilde: return t_checked(order);
        case SeriesId::P: return P_checked(order);
        case SeriesId::KtildeResFlow: return kres_flow_checked(order);
        case SeriesId::KtildeResClosed: return kres_closed(order);
        case SeriesId::PtildeRes: return pres_direct(order);
        case SeriesId::Phe: return Phe_from_difference(order);
    }
    throw std::logic_error("unknown series id");
}

PkPoly SeriesBuilder::canonical(SeriesId id, int order) const {
    switch (id) {
        case SeriesId::Ktilde:
        case SeriesId::Ptilde:
        case SeriesId::Ttilde:
        case SeriesId::P:
        case SeriesId::KtildeResFlow: return to_plain(build(id, order));
        case SeriesId::PtildeRes: return pres_from_normalizer(order);
        default: return build(id, order);
    }
}

}  // namespace seacalc
