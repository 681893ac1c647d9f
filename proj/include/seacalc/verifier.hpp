#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seacalc/golden.hpp"
#include "seacalc/poly.hpp"
#include "seacalc/series.hpp"

namespace seacalc {

/// Expected state of a residual. Negative claims expect a nonzero residual.
enum class Expect { Zero, Nonzero, Context };

using Residual = std::variant<PkPoly, BPoly>;

/// One checked identity. `failures` collects non-polynomial mismatches
/// (counts, signs, rational identities).
struct Witness {
    std::string label;
    Expect expect = Expect::Zero;
    std::optional<Residual> residual;
    std::vector<std::string> failures;

    bool residual_is_zero() const;
    bool passed() const;
};

struct VerifyReport {
    std::string suite_name;
    int order = 0;
    bool passed = false;
    std::vector<Witness> witnesses;
    long long runtime_ms = 0;

    /// Recomputes `passed` from the witnesses.
    void finalize();
    std::size_t failed_count() const;
};

/// Depths and inputs for the default suite.
struct VerifyOptions {
    int order_pk = 6;      ///< pk-layer identities
    int order_b = 5;       ///< B-layer route and replacement checks
    int golden_order = 3;  ///< B-order of the reference tables
    int counting_r = 3;       ///< counting check, all r <= counting_r
    int coeff_rmax = 10;   ///< coefficient identities, all r <= coeff_rmax
    std::filesystem::path golden_path;
    Mutation mutation = Mutation::None;
};

VerifyReport check_idempotence(const SeriesBuilder& builder, int order);
VerifyReport check_t_not_idempotent(const SeriesBuilder& builder);
VerifyReport check_route_equivalence(const SeriesBuilder& builder, int order_pk, int order_b);
VerifyReport check_res_algebra(const SeriesBuilder& builder, int order);
VerifyReport check_defining_relations(const SeriesBuilder& builder, int order);
VerifyReport check_occurrence_counts(const SeriesBuilder& builder, int r_max);
VerifyReport check_coefficient_identities(const CoefficientTable& table, int rmax);
VerifyReport check_replacement_rule(const SeriesBuilder& builder, int order_b);
VerifyReport check_high_energy(const SeriesBuilder& builder, int order_pk, int order_b);
VerifyReport check_golden(const SeriesBuilder& builder, const std::vector<GoldenTable>& tables);

/// One raw appearance of a word in the expansion of S(l) before merging.
struct Occurrence {
    PkWord word;
    int sign;
};

/// Enumerates every index tuple (beta_1, branch_1, ..., beta_2l, branch_2l, alpha)
/// of S(l) with pi factors omitted whose b-degree is exactly 2r, and returns
/// the resulting word and sign for each tuple.
std::vector<Occurrence> enumerate_S_occurrences(int l, int r);

/// Suite names accepted by run_suite, in execution order.
const std::vector<std::string>& suite_names();

/// Runs one suite by name, or every suite for "all".
/// Throws std::invalid_argument for unknown names.
std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace seacalc
