#include "seacalc/golden.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "seacalc/render.hpp"

namespace seacalc {

GoldenParseError::GoldenParseError(std::string source, int line, std::string field, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": field '" + field + "': " + message),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

BPoly GoldenTable::to_poly() const {
    BPoly out(order);
    for (const auto& e : entries) {
        out.add(e.word, Coefficient::pi_power(e.pi_exponent, e.value));
    }
    return out;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return out;
}

BigInt parse_big(const std::string& text) {
    const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size() || text.find_first_not_of("0123456789", start) != std::string::npos) {
        throw std::invalid_argument("not an integer");
    }
    return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace

std::vector<GoldenTable> parse_golden(std::istream& in, const std::string& source, int order) {
    std::vector<GoldenTable> tables;
    std::map<SeriesId, std::size_t> index;
    std::set<std::tuple<SeriesId, std::string, int>> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 5) {
            throw GoldenParseError(source, lineno, "record",
                                   "expected 5 tab-separated fields, got " + std::to_string(fields.size()));
        }
        const auto id = parse_series_id(fields[0]);
        if (!id) {
            throw GoldenParseError(source, lineno, "series", "unknown series '" + fields[0] + "'");
        }
        std::optional<BWord> word;
        try {
            word = BWord::parse(fields[1]);
        } catch (const std::invalid_argument& e) {
            throw GoldenParseError(source, lineno, "word", e.what());
        }
        if (word->degree() > order) {
            throw GoldenParseError(source, lineno, "word",
                                   "B-degree " + std::to_string(word->degree()) + " exceeds table order " +
                                       std::to_string(order));
        }
        int exponent = 0;
        try {
            std::size_t used = 0;
            exponent = std::stoi(fields[2], &used);
            if (used != fields[2].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw GoldenParseError(source, lineno, "pi_exponent", "not an integer: '" + fields[2] + "'");
        }
        if (exponent < 0 || exponent % 2 != 0) {
            throw GoldenParseError(source, lineno, "pi_exponent", "must be even and non-negative");
        }
        BigInt num, den;
        try {
            num = parse_big(fields[3]);
        } catch (const std::exception&) {
            throw GoldenParseError(source, lineno, "numerator", "not an integer: '" + fields[3] + "'");
        }
        try {
            den = parse_big(fields[4]);
        } catch (const std::exception&) {
            throw GoldenParseError(source, lineno, "denominator", "not an integer: '" + fields[4] + "'");
        }
        if (den <= 0) {
            throw GoldenParseError(source, lineno, "denominator", "must be positive");
        }
        if (num == 0) {
            throw GoldenParseError(source, lineno, "numerator", "zero coefficients are not stored");
        }
        if (!seen.emplace(*id, word->str(), exponent).second) {
            throw GoldenParseError(source, lineno, "word",
                                   "duplicate entry (" + fields[0] + ", " + fields[1] + ", " + fields[2] + ")");
        }
        auto [it, inserted] = index.try_emplace(*id, tables.size());
        if (inserted) tables.push_back(GoldenTable{*id, order, {}});
        tables[it->second].entries.push_back(GoldenEntry{*word, exponent, Rational(num, den)});
    }
    return tables;
}

std::vector<GoldenTable> load_golden(const std::filesystem::path& path, int order) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open golden file '" + path.string() + "'");
    }
    return parse_golden(in, path.string(), order);
}

void write_golden(std::ostream& out, const std::vector<GoldenTable>& tables) {
    for (const auto& t : tables) {
        for (const auto& term : flatten(t.to_poly())) {
            out << series_name(t.series) << '\t' << term.word << '\t' << term.pi_exponent << '\t'
                << term.value.numerator() << '\t' << term.value.denominator() << '\n';
        }
    }
}

}  // namespace seacalc
