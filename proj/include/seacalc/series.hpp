#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "seacalc/pk_algebra.hpp"

namespace seacalc {

/// Named perturbation series.
enum class SeriesId {
    A,                ///< (p + pi^2 pbpbp)^(1/2) - p
    X,                ///< ktilde^2 - p in the normalized inner form
    U,                ///< p + X
    Ktilde,           ///< the causal operator k with interaction
    Ptilde,           ///< square root of ktilde^2
    PtildeY,          ///< (p + X)^(-1/2)
    Y,                ///< rescaling operator (p + X)^(-1)
    Ttilde,           ///< (ptilde - ktilde) / 2
    P,                ///< the rescaled fermionic projector
    KtildeResFlow,    ///< rescaled k via sum_n e_n ktilde X^n
    KtildeResClosed,  ///< rescaled k via the subset-sum closed form
    PtildeRes,        ///< rescaled p (spectral projector)
    Phe,              ///< high-energy part P - P^res
};

const std::vector<SeriesId>& all_series();
std::string_view series_name(SeriesId id);
/// Accepts the names produced by series_name plus the alias "KtildeRes".
std::optional<SeriesId> parse_series_id(std::string_view name);

/// How a core is sandwiched in the full operator.
enum class Wrapper {
    None,     ///< inner series, no wrapper factors
    Plain,    ///< b^< core b^>
    Checked,  ///< normalized wrappers; b^< = checked-b^< (p + A)
};

/// Wrapper a series is expressed over once converted for cross-series comparison.
Wrapper canonical_wrapper(SeriesId id);
/// Wrapper of the core returned by SeriesBuilder::build.
Wrapper native_wrapper(SeriesId id);

/// Single sign flips used to confirm that the verification suite is sensitive
/// to each closed-form coefficient.
enum class Mutation { None, FlipC1, FlipE1, FlipF11, FlipC11, FlipSigmaParity };

const std::vector<Mutation>& all_mutations();
std::string_view mutation_name(Mutation m);

/// Subset Q of {1, ..., 2r+1} selecting the positions that carry p.
class SubsetQ {
public:
    SubsetQ() = default;
    explicit SubsetQ(std::set<int> members) : members_(std::move(members)) {}
    const std::set<int>& members() const { return members_; }
    bool contains(int x) const { return members_.count(x) != 0; }
    std::size_t size() const { return members_.size(); }

private:
    std::set<int> members_;
};

/// 1 + sum of the positions in {1, ..., 2r+1} not in Q.
/// Throws std::invalid_argument unless Q is within range and #Q == 2 rho.
long sigma(int r, int rho, const SubsetQ& q);

/// All subsets of {1, ..., n} with the given size, in lexicographic order.
std::vector<SubsetQ> subsets_of_size(int n, int size);

/// Coefficient provider consumed by the builders; applies an optional mutation.
class CoefficientTable {
public:
    explicit CoefficientTable(Mutation mutation = Mutation::None) : mutation_(mutation) {}

    Mutation mutation() const { return mutation_; }
    Rational c(int n) const;
    Rational e(int n) const;
    Rational f(int l, int r) const;
    Coefficient c_r_rho(int r, int rho) const;
    /// (-1)^sigma as +1 / -1.
    int sigma_sign(int r, int rho, const SubsetQ& q) const;

private:
    Mutation mutation_;
};

/// Builds every named series as a pk-layer core truncated at a requested
/// b-order. Cores with wrapper Checked live between the normalized wrappers;
/// `to_plain` rewrites them over the plain pair b^<, b^>.
class SeriesBuilder {
public:
    explicit SeriesBuilder(CoefficientTable table = CoefficientTable()) : table_(table) {}

    const CoefficientTable& table() const { return table_; }

    // Building blocks.
    PkPoly pbpbp(int order) const;             ///< pi^2 pbpbp
    PkPoly junction(int order) const;          ///< p + pi^2 pbpbp, the value of b^> b^<
    PkPoly normalizer(int order) const;        ///< (p + pi^2 pbpbp)^(-1/2)
    PkPoly k_chain(int order) const;           ///< sum_beta (-pi^2)^beta k (bk)^(2 beta)
    PkPoly p_chain(int order) const;           ///< sum_beta (-pi^2)^beta p (bp)^(2 beta)
    PkPoly to_plain(const PkPoly& checked_core) const;
    /// Product of two plain-wrapped operators: a (p + pi^2 pbpbp) b.
    PkPoly plain_product(const PkPoly& a, const PkPoly& b) const;

    PkPoly series_A(int order) const;
    PkPoly series_X(int order) const;
    PkPoly series_U(int order) const;
    PkPoly ktilde_checked(int order) const;
    PkPoly ktilde_direct(int order) const;
    PkPoly ptilde_checked(int order) const;
    PkPoly series_Y(int order) const;
    PkPoly series_ptildeY(int order) const;
    PkPoly t_checked(int order) const;
    /// (p - ptildeY ktilde) / 2 over checked wrappers.
    PkPoly P_checked(int order) const;
    /// t Y t over checked wrappers.
    PkPoly P_checked_tYt(int order) const;
    /// (ptilde^res - ktilde^res) / 2 over plain wrappers.
    PkPoly P_from_res(int order) const;

    PkPoly G(int r, int rho) const;
    PkPoly kres_closed(int order) const;
    /// sum_n e_n ktilde X^n over checked wrappers.
    PkPoly kres_flow_checked(int order) const;
    PkPoly kres_flow(int order) const;
    /// [sum_beta (-pi^2)^beta k(bk)^(2 beta) (p + pi^2 pbpbp)]^(2l) sum_alpha (-pi^2)^alpha k(bk)^(2 alpha)
    PkPoly S_l(int l, int order) const;
    /// sum_l f_{l,r} S(l) with r = order / 2.
    PkPoly kres_from_S(int order) const;
    PkPoly pres_direct(int order) const;
    PkPoly pres_from_normalizer(int order) const;
    /// P - (ptilde^res - ktilde) / 2.
    PkPoly Phe_from_difference(int order) const;
    /// (ktilde - ktilde^res) / 2.
    PkPoly Phe_closed(int order) const;

    /// Native core of `id` (checked wrappers where the construction uses them).
    PkPoly build(SeriesId id, int order) const;
    /// Core of `id` over its canonical wrapper (plain for wrapped series).
    PkPoly canonical(SeriesId id, int order) const;

private:
    CoefficientTable table_;
};

}  // namespace seacalc
