#include <doctest.h>

#include <stdexcept>

#include "seacalc/pk_algebra.hpp"
#include "seacalc/series.hpp"

using namespace seacalc;

namespace {

PkPoly poly(int order, std::initializer_list<std::pair<const char*, Coefficient>> terms) {
    PkPoly out(order);
    for (const auto& [w, c] : terms) out.add(PkWord::parse(w), c);
    return out;
}

Coefficient pi2(Rational v) { return Coefficient::pi_power(2, v); }

const SeriesBuilder builder;

}  // namespace

TEST_CASE("series ids") {
    CHECK(parse_series_id("KtildeRes") == SeriesId::KtildeResClosed);
    CHECK(parse_series_id("KtildeRes_flow") == SeriesId::KtildeResFlow);
    CHECK_FALSE(parse_series_id("ktilde").has_value());
    for (SeriesId id : all_series()) CHECK(parse_series_id(series_name(id)) == id);
    CHECK(canonical_wrapper(SeriesId::X) == Wrapper::None);
    CHECK(canonical_wrapper(SeriesId::P) == Wrapper::Plain);
    CHECK(native_wrapper(SeriesId::P) == Wrapper::Checked);
    CHECK(native_wrapper(SeriesId::KtildeResClosed) == Wrapper::Plain);
}

TEST_CASE("A") {
    CHECK(builder.series_A(1).is_zero());
    CHECK(builder.series_A(2) == poly(2, {{"pbpbp", pi2(Rational(1, 2))}}));
    CHECK(builder.series_A(4) ==
          poly(4, {{"pbpbp", pi2(Rational(1, 2))}, {"pbpbpbpbp", Coefficient::pi_power(4, Rational(-1, 8))}}));
}

TEST_CASE("ktilde core") {
    CHECK(builder.ktilde_checked(0) == poly(0, {{"k", Coefficient(1)}}));
    CHECK(builder.ktilde_checked(1) == poly(1, {{"k", Coefficient(1)}}));
    CHECK(builder.ktilde_checked(2) == poly(2, {{"k", Coefficient(1)},
                                                {"kbkbk", pi2(Rational(-1))},
                                                {"pbpbk", pi2(Rational(1, 2))},
                                                {"kbpbp", pi2(Rational(1, 2))}}));
    CHECK(builder.ktilde_direct(2) == poly(2, {{"k", Coefficient(1)}, {"kbkbk", pi2(Rational(-1))}}));
    CHECK(builder.S_l(0, 2) == builder.ktilde_direct(2));
    CHECK(builder.S_l(0, 0) == poly(0, {{"k", Coefficient(1)}}));
}

TEST_CASE("X, ptilde, Y, ptildeY at low order") {
    const PkPoly x2 = poly(2, {{"pbpbp", pi2(Rational(1))},
                               {"pbkbk", pi2(Rational(-1))},
                               {"kbkbp", pi2(Rational(-1))},
                               {"kbpbk", pi2(Rational(1))}});
    CHECK(builder.series_X(0).is_zero());
    CHECK(builder.series_X(1).is_zero());
    CHECK(builder.series_X(2) == x2);
    CHECK(builder.ptilde_checked(0) == identity_poly(0));
    CHECK(builder.ptilde_checked(2) == identity_poly(2) + x2.scaled(Rational(1, 2)));
    CHECK(builder.series_Y(0) == identity_poly(0));
    CHECK(builder.series_Y(2) == identity_poly(2) - x2);
    CHECK(builder.series_ptildeY(0) == identity_poly(0));
    CHECK(builder.series_ptildeY(2) == identity_poly(2) - x2.scaled(Rational(1, 2)));
}

TEST_CASE("defining relations through order 8") {
    const int order = 8;
    const PkPoly p = identity_poly(order);
    const PkPoly u = p + builder.series_X(order);
    const PkPoly pt = builder.ptilde_checked(order);
    const PkPoly y = builder.series_Y(order);
    CHECK(pt * pt == u);
    CHECK(u * y == p);
    CHECK(builder.series_ptildeY(order) == pt * y);
}

TEST_CASE("vacuum projector and t") {
    const PkPoly vac = poly(0, {{"p", Coefficient(Rational(1, 2))}, {"k", Coefficient(Rational(-1, 2))}});
    CHECK(builder.P_checked(0) == vac);
    CHECK(builder.t_checked(0) == vac);
    const PkPoly t = builder.t_checked(2);
    CHECK_FALSE((t * t - t).is_zero());
    for (int n = 0; n <= 6; ++n) {
        const PkPoly pp = builder.P_checked(n);
        CHECK(pp * pp == pp);
    }
}

TEST_CASE("G and the closed rescaled k") {
    CHECK(builder.G(0, 0) == poly(0, {{"k", Coefficient(1)}}));
    CHECK(builder.G(1, 0) == poly(2, {{"kbkbk", Coefficient(-1)}}));
    // subsets {1,2}, {1,3}, {2,3} have sigma 4, 3, 2
    CHECK(builder.G(1, 1) ==
          poly(2, {{"pbpbk", Coefficient(1)}, {"pbkbp", Coefficient(-1)}, {"kbpbp", Coefficient(1)}}));
    CHECK_THROWS_AS(builder.G(1, 2), std::invalid_argument);

    CHECK(builder.kres_closed(0) == poly(0, {{"k", Coefficient(1)}}));
    CHECK(builder.kres_closed(2) == poly(2, {{"k", Coefficient(1)},
                                             {"kbpbp", pi2(Rational(-1, 2))},
                                             {"pbkbp", pi2(Rational(1, 2))},
                                             {"pbpbk", pi2(Rational(-1, 2))},
                                             {"kbkbk", pi2(Rational(-1, 2))}}));
    CHECK(builder.kres_flow(0) == poly(0, {{"k", Coefficient(1)}}));
    for (int n = 0; n <= 6; ++n) {
        CHECK(builder.kres_flow(n) == builder.kres_closed(n));
        CHECK(builder.kres_from_S(n) == builder.kres_closed(n));
    }
}

TEST_CASE("rescaled p and the four-fold identity") {
    CHECK(builder.pres_direct(0) == identity_poly(0));
    CHECK(builder.pres_direct(2) == identity_poly(2) - poly(2, {{"pbpbp", pi2(Rational(1))}}));
    CHECK(builder.pres_from_normalizer(6) == builder.pres_direct(6));
    const PkPoly pr = builder.pres_direct(6);
    const PkPoly kr = builder.kres_closed(6);
    CHECK(builder.plain_product(kr, kr) == pr);
    CHECK(builder.plain_product(pr, kr) == kr);
    CHECK(builder.plain_product(kr, pr) == kr);
    CHECK(builder.plain_product(pr, pr) == pr);
}

TEST_CASE("projector routes and the high-energy part") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(builder.P_checked_tYt(n) == builder.P_checked(n));
        CHECK(builder.to_plain(builder.P_checked(n)) == builder.P_from_res(n));
        CHECK(builder.Phe_from_difference(n) == builder.Phe_closed(n));
    }
    CHECK(builder.Phe_closed(0).is_zero());
    CHECK(builder.Phe_closed(1).is_zero());
    CHECK(builder.Phe_closed(2) ==
          (builder.ktilde_direct(2) - builder.kres_closed(2)).scaled(Rational(1, 2)));
    CHECK_FALSE(builder.Phe_closed(2).is_zero());
}

TEST_CASE("build and canonical agree where no wrapper conversion is needed") {
    for (SeriesId id : all_series()) {
        const PkPoly native = builder.build(id, 4);
        const PkPoly canon = builder.canonical(id, 4);
        if (native_wrapper(id) == Wrapper::Checked) {
            CHECK(canon == builder.to_plain(native));
        } else if (id != SeriesId::PtildeRes) {
            CHECK(canon == native);
        } else {
            CHECK(canon.same_terms(native));
        }
    }
}
