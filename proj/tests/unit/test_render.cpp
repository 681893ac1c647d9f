#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "seacalc/b_expansion.hpp"
#include "seacalc/render.hpp"

using namespace seacalc;

namespace {

std::set<std::string> split_terms(std::string text) {
    // "a - b + c" -> {"a", "-b", "+c"}
    std::set<std::string> out;
    std::istringstream in(text);
    std::string tok, sign;
    while (in >> tok) {
        if (tok == "-" || tok == "+") {
            sign = tok;
        } else {
            out.insert(sign + tok);
            sign.clear();
        }
    }
    return out;
}

PkPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(1, 5);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::uniform_int_distribution<int> pi(0, 3);
    std::bernoulli_distribution coin;
    PkPoly out(4);
    for (int t = 0; t < 6; ++t) {
        std::vector<Letter> letters(len(rng));
        for (auto& l : letters) l = coin(rng) ? Letter::K : Letter::P;
        out.add(PkWord(std::move(letters)), Coefficient::pi_power(2 * pi(rng), Rational(BigInt(num(rng)), BigInt(den(rng)))));
    }
    return out;
}

const SeriesBuilder builder;

}  // namespace

TEST_CASE("formats") {
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("latex") == OutputFormat::Latex);
    CHECK_FALSE(parse_format("xml").has_value());
    CHECK(format_name(OutputFormat::Text) == "text");
}

TEST_CASE("text rendering") {
    const BPoly kt = expand_named(builder, SeriesId::Ktilde, 1);
    CHECK(split_terms(render_text(kt)) == std::set<std::string>{"k", "-sBk", "-kBs"});
    CHECK(render_text(kt) == "k - kBs - sBk");
    CHECK(render_text(PkPoly(3)) == "0");
    CHECK(render_text(builder.pres_direct(2)) == "p - pi^2*pbpbp");
    CHECK(render_text(builder.P_checked(0)) == "1/2*p - 1/2*k");
}

TEST_CASE("latex rendering") {
    const std::string s = render_latex(expand_named(builder, SeriesId::PtildeRes, 2));
    CHECK(s.find("\\mathcal{B}") != std::string::npos);
    CHECK(s.find("\\pi^{2}") != std::string::npos);
    CHECK(render_latex(builder.P_checked(0)).find("\\frac{1}{2}") != std::string::npos);
}

TEST_CASE("json document") {
    const auto doc = to_json(builder.P_checked(0), "P");
    CHECK(doc["series"] == "P");
    CHECK(doc["layer"] == "pk");
    CHECK(doc["order"] == 0);
    REQUIRE(doc["terms"].size() == 2);
    CHECK(doc["terms"][0]["word"] == "p");
    CHECK(doc["terms"][0]["num"] == 1);
    CHECK(doc["terms"][0]["den"] == 2);
    CHECK(doc["terms"][1]["word"] == "k");
    CHECK(doc["terms"][1]["num"] == -1);
    CHECK(to_json(builder.series_X(1), "X")["terms"].empty());
    CHECK(to_json(expand_named(builder, SeriesId::X, 2), "X")["layer"] == "b");
}

TEST_CASE("json round trip") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 50; ++i) {
        const PkPoly a = random_poly(rng);
        CHECK(pk_poly_from_json(to_json(a, "A")) == a);
    }
    const BPoly b = expand_named(builder, SeriesId::P, 3);
    CHECK(b_poly_from_json(nlohmann::json::parse(to_json(b, "P").dump())) == b);

    PkPoly big(0);
    Rational huge(1);
    for (int i = 0; i < 5; ++i) huge *= Rational(BigInt("123456789012345"), BigInt(1));
    big.add(PkWord::parse("k"), Coefficient(huge));
    const auto doc = to_json(big, "A");
    CHECK(doc["terms"][0]["num"].is_string());
    CHECK(pk_poly_from_json(doc) == big);

    CHECK_THROWS_AS(pk_poly_from_json(nlohmann::json::parse(R"({"order": 1})")), std::invalid_argument);
    CHECK_THROWS_AS(pk_poly_from_json(to_json(b, "P")), std::invalid_argument);
}

TEST_CASE("equal polynomials render identically") {
    const PkPoly a = builder.kres_flow(4);
    const PkPoly b = builder.kres_closed(4);
    REQUIRE(a == b);
    for (OutputFormat f : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Latex}) {
        CHECK(render_poly(a, "K", f) == render_poly(b, "K", f));
    }
}
