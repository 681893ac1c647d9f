#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "seacalc/poly.hpp"
#include "seacalc/series.hpp"

namespace seacalc {

/// Structured parse failure naming the source line and field.
class GoldenParseError : public std::runtime_error {
public:
    GoldenParseError(std::string source, int line, std::string field, const std::string& message);

    const std::string& source() const { return source_; }
    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::string source_;
    int line_;
    std::string field_;
};

struct GoldenEntry {
    BWord word;
    int pi_exponent;
    Rational value;
};

/// Reference expansion of one series through B-order `order`.
struct GoldenTable {
    SeriesId series;
    int order;
    std::vector<GoldenEntry> entries;

    BPoly to_poly() const;
};

/// Parses the tab-separated golden format: series, word, pi exponent,
/// numerator, denominator. Blank lines and lines starting with '#' are
/// skipped. Tables are returned in order of first appearance.
std::vector<GoldenTable> parse_golden(std::istream& in, const std::string& source = "<stream>", int order = 3);
std::vector<GoldenTable> load_golden(const std::filesystem::path& path, int order = 3);

/// Writes a table back in the same format (canonical entry order).
void write_golden(std::ostream& out, const std::vector<GoldenTable>& tables);

}  // namespace seacalc
