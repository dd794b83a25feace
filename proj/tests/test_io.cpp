#include <doctest.h>

#include "hahnexp/errors.hpp"
#include "hahnexp/json_io.hpp"

using namespace hahnexp;
using nlohmann::json;

TEST_CASE("hahn elements round trip through canonical JSON") {
    json j = json::parse(R"js({"terms": [
        {"idx": "-1/2", "coef": "3"},
        {"idx": "2", "coef": "(exp 1)"}]})js");
    HahnElement e = hahn_from_json(j);
    CHECK(e.support_size() == 2);
    CHECK(hahn_to_json(e).dump() == j.dump());

    CHECK(hahn_from_json(json::parse(R"({"terms": []})")).is_zero());
}

TEST_CASE("strict hahn parsing rejects what lenient canonicalizes") {
    json unsorted = json::parse(R"({"terms": [
        {"idx": "2", "coef": "1"},
        {"idx": "0", "coef": "5"}]})");
    CHECK_THROWS_AS(hahn_from_json(unsorted), ParseError);
    HahnElement e = hahn_from_json(unsorted, /*lenient=*/true);
    CHECK(e.terms().front().idx == ChainPoint(0));

    json zero_coef = json::parse(R"({"terms": [{"idx": "0", "coef": "0"}]})");
    CHECK_THROWS_AS(hahn_from_json(zero_coef), ParseError);
    CHECK(hahn_from_json(zero_coef, /*lenient=*/true).is_zero());

    CHECK_THROWS_AS(hahn_from_json(json::parse(R"({"points": []})")), ParseError);
    CHECK_THROWS_AS(
        hahn_from_json(json::parse(R"({"terms": [{"idx": "x", "coef": "1"}]})")),
        ParseError);
}

TEST_CASE("series round trip, including the truncation certificate") {
    json j = json::parse(R"({
        "terms": [
            {"exp": {"terms": [{"idx": "0", "coef": "-1"}]}, "coef": "2"},
            {"exp": {"terms": []}, "coef": "1/3"}],
        "trunc": {"terms": [{"idx": "0", "coef": "4"}]}})");
    SeriesElement s = series_from_json(j);
    REQUIRE(s.trunc());
    CHECK(series_to_json(s).dump() == j.dump());

    json no_trunc = json::parse(R"({"terms": [], "trunc": null})");
    SeriesElement z = series_from_json(no_trunc);
    CHECK(z.is_zero());
    CHECK(!z.trunc());
    CHECK(series_to_json(z).dump() == no_trunc.dump());
}

TEST_CASE("strict series parsing enforces exponent order") {
    json bad = json::parse(R"({"terms": [
        {"exp": {"terms": []}, "coef": "1"},
        {"exp": {"terms": [{"idx": "0", "coef": "-1"}]}, "coef": "1"}]})");
    CHECK_THROWS_AS(series_from_json(bad), ParseError);
    SeriesElement s = series_from_json(bad, /*lenient=*/true);
    CHECK(s.terms().size() == 2);
    // lenient parse sorts: the infinite monomial comes first
    CHECK(!s.terms().front().exponent.is_zero());
}

TEST_CASE("piecewise-linear automorphisms round trip") {
    PLAutomorphism f({Rational(0), Rational(1)},
                     {Rational(1), Rational(2), Rational(1, 2)}, Rational(-3));
    json j = pl_to_json(f);
    PLAutomorphism g = pl_from_json(j);
    for (long x = -3; x <= 3; ++x)
        CHECK(g.apply(ChainPoint(x)) == f.apply(ChainPoint(x)));
    CHECK(pl_to_json(g).dump() == j.dump());

    json identity = json::parse(R"([[null, "1", "0"]])");
    CHECK(pl_from_json(identity).is_identity());
}

TEST_CASE("discontinuous or malformed automorphisms are rejected") {
    CHECK_THROWS_AS(pl_from_json(json::parse(R"([])")), ParseError);
    CHECK_THROWS_AS(pl_from_json(json::parse(R"([["0", "1", "0"]])")), ParseError);
    // slope changes at 0 but the stated offset does not join continuously
    json gap = json::parse(R"([[null, "1", "0"], ["0", "2", "5"]])");
    CHECK_THROWS_AS(pl_from_json(gap), ParseError);
}
