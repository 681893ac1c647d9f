#include "seacalc/render.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace seacalc {

using nlohmann::json;

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "latex") return OutputFormat::Latex;
    return std::nullopt;
}

std::string_view format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Latex: return "latex";
    }
    return "?";
}

template <class W>
std::vector<FlatTerm> flatten(const Poly<W>& poly) {
    struct Keyed {
        const W* word;
        FlatTerm term;
    };
    std::vector<Keyed> keyed;
    for (const auto& [w, c] : poly.terms()) {
        for (const auto& [e, v] : c.terms()) {
            keyed.push_back({&w, FlatTerm{w.str(), w.degree(), e, v}});
        }
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.term.degree != b.term.degree) return a.term.degree < b.term.degree;
        if (a.term.pi_exponent != b.term.pi_exponent) return a.term.pi_exponent < b.term.pi_exponent;
        return *a.word < *b.word;
    });
    std::vector<FlatTerm> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.term));
    return out;
}

template std::vector<FlatTerm> flatten(const PkPoly&);
template std::vector<FlatTerm> flatten(const BPoly&);

namespace {

template <class W>
std::string text_impl(const Poly<W>& poly) {
    const auto terms = flatten(poly);
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        const bool negative = t.value.sign() < 0;
        const Rational mag = negative ? -t.value : t.value;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (mag != Rational(1)) os << mag << "*";
        if (t.pi_exponent > 0) os << "pi^" << t.pi_exponent << "*";
        os << t.word;
    }
    return os.str();
}

std::string latex_word(const std::string& word, char separator) {
    std::string out;
    for (char c : word) {
        if (c == separator) {
            out += (separator == 'B') ? "\\mathcal{B}" : "b";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

template <class W>
std::string latex_impl(const Poly<W>& poly) {
    const auto terms = flatten(poly);
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        const bool negative = t.value.sign() < 0;
        const Rational mag = negative ? -t.value : t.value;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (mag.denominator() != 1) {
            os << "\\frac{" << mag.numerator() << "}{" << mag.denominator() << "} ";
        } else if (mag != Rational(1)) {
            os << mag << " ";
        }
        if (t.pi_exponent > 0) os << "\\pi^{" << t.pi_exponent << "} ";
        os << latex_word(t.word, W::layer_type::separator);
    }
    return os.str();
}

json integer_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return json(static_cast<std::int64_t>(v));
    }
    return json(v.str());
}

BigInt integer_from_json(const json& j, const char* field) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>()).numerator();
    throw std::invalid_argument(std::string("field '") + field + "' must be an integer");
}

template <class W>
json json_impl(const Poly<W>& poly, std::string_view series, std::string_view layer) {
    json terms = json::array();
    for (const auto& t : flatten(poly)) {
        terms.push_back({{"word", t.word},
                         {"pi_exponent", t.pi_exponent},
                         {"num", integer_json(t.value.numerator())},
                         {"den", integer_json(t.value.denominator())}});
    }
    return json{{"series", std::string(series)},
                {"layer", std::string(layer)},
                {"order", poly.order()},
                {"terms", std::move(terms)}};
}

template <class W>
Poly<W> poly_from_json_impl(const json& doc, std::string_view layer) {
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("terms")) {
        throw std::invalid_argument("polynomial document needs 'order' and 'terms'");
    }
    if (doc.contains("layer") && doc.at("layer").get<std::string>() != layer) {
        throw std::invalid_argument("layer mismatch: expected '" + std::string(layer) + "'");
    }
    Poly<W> out(doc.at("order").get<int>());
    for (const auto& t : doc.at("terms")) {
        const W word = W::parse(t.at("word").get<std::string>());
        const int exponent = t.at("pi_exponent").get<int>();
        const BigInt den = integer_from_json(t.at("den"), "den");
        if (den <= 0) throw std::invalid_argument("field 'den' must be positive");
        out.add(word, Coefficient::pi_power(exponent, Rational(integer_from_json(t.at("num"), "num"), den)));
    }
    return out;
}

}  // namespace

std::string render_text(const PkPoly& poly) { return text_impl(poly); }
std::string render_text(const BPoly& poly) { return text_impl(poly); }
std::string render_latex(const PkPoly& poly) { return latex_impl(poly); }
std::string render_latex(const BPoly& poly) { return latex_impl(poly); }

json to_json(const PkPoly& poly, std::string_view series) { return json_impl(poly, series, PkLayer::name); }
json to_json(const BPoly& poly, std::string_view series) { return json_impl(poly, series, BLayer::name); }

PkPoly pk_poly_from_json(const json& doc) {
    try {
        return poly_from_json_impl<PkWord>(doc, PkLayer::name);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial document: ") + e.what());
    }
}

BPoly b_poly_from_json(const json& doc) {
    try {
        return poly_from_json_impl<BWord>(doc, BLayer::name);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial document: ") + e.what());
    }
}

namespace {

template <class W>
std::string render_poly_impl(const Poly<W>& poly, std::string_view series, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return text_impl(poly);
        case OutputFormat::Latex: return latex_impl(poly);
        case OutputFormat::Json: return json_impl(poly, series, W::layer_type::name).dump(2);
    }
    return {};
}

std::string_view expect_name(Expect e) {
    switch (e) {
        case Expect::Zero: return "zero";
        case Expect::Nonzero: return "nonzero";
        case Expect::Context: return "context";
    }
    return "?";
}

std::string residual_text(const Residual& r, OutputFormat format) {
    return std::visit(
        [format](const auto& poly) {
            return format == OutputFormat::Latex ? latex_impl(poly) : text_impl(poly);
        },
        r);
}

}  // namespace

std::string render_poly(const PkPoly& poly, std::string_view series, OutputFormat format) {
    return render_poly_impl(poly, series, format);
}

std::string render_poly(const BPoly& poly, std::string_view series, OutputFormat format) {
    return render_poly_impl(poly, series, format);
}

json to_json(const VerifyReport& report, bool include_timing) {
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        json item{{"label", w.label},
                  {"expect", std::string(expect_name(w.expect))},
                  {"passed", w.passed()},
                  {"failures", w.failures}};
        if (w.residual) {
            item["residual"] = std::visit([](const auto& poly) { return to_json(poly, "residual"); }, *w.residual);
        }
        witnesses.push_back(std::move(item));
    }
    json out{{"suite", report.suite_name},
             {"order", report.order},
             {"passed", report.passed},
             {"witnesses", std::move(witnesses)}};
    if (include_timing) out["runtime_ms"] = report.runtime_ms;
    return out;
}

std::string render_reports(const std::vector<VerifyReport>& reports, OutputFormat format, bool include_timing) {
    if (format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, include_timing));
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << r.suite_name << " (order " << r.order << ")";
        if (include_timing) os << "  " << r.runtime_ms << " ms";
        os << "\n";
        for (const auto& w : r.witnesses) {
            const char* mark = w.expect == Expect::Context ? "info" : (w.passed() ? "ok  " : "FAIL");
            os << "  [" << mark << "] " << w.label;
            if (w.expect == Expect::Nonzero) os << " (expected nonzero)";
            os << "\n";
            const bool show_residual = w.residual && (!w.passed() || w.expect != Expect::Zero);
            if (show_residual) {
                os << "         residual: " << residual_text(*w.residual, format) << "\n";
            }
            for (const auto& f : w.failures) os << "         " << f << "\n";
        }
    }
    return os.str();
}

}  // namespace seacalc
