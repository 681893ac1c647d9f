#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "seacalc/poly.hpp"
#include "seacalc/verifier.hpp"

namespace seacalc {

enum class OutputFormat { Text, Json, Latex };

std::optional<OutputFormat> parse_format(std::string_view name);
std::string_view format_name(OutputFormat f);

/// One (word, pi exponent) entry of a polynomial.
struct FlatTerm {
    std::string word;
    int degree;
    int pi_exponent;
    Rational value;
};

/// Canonical order: degree ascending, then pi exponent, then word (p < k < s).
template <class W>
std::vector<FlatTerm> flatten(const Poly<W>& poly);

std::string render_text(const PkPoly& poly);
std::string render_text(const BPoly& poly);
std::string render_latex(const PkPoly& poly);
std::string render_latex(const BPoly& poly);

/// {series, layer, order, terms: [{word, pi_exponent, num, den}]}
nlohmann::json to_json(const PkPoly& poly, std::string_view series);
nlohmann::json to_json(const BPoly& poly, std::string_view series);

/// Parses a document produced by to_json.
/// Throws std::invalid_argument on schema violations.
PkPoly pk_poly_from_json(const nlohmann::json& doc);
BPoly b_poly_from_json(const nlohmann::json& doc);

std::string render_poly(const PkPoly& poly, std::string_view series, OutputFormat format);
std::string render_poly(const BPoly& poly, std::string_view series, OutputFormat format);

nlohmann::json to_json(const VerifyReport& report, bool include_timing = false);
std::string render_reports(const std::vector<VerifyReport>& reports, OutputFormat format,
                           bool include_timing = false);

}  // namespace seacalc
