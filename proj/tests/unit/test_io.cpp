#include <doctest.h>

#include <algorithm>

#include "tateap/error.hpp"
#include "tateap/io.hpp"
#include "test_support.hpp"

using namespace tateap;
using namespace tateap::testing;
using tateap::io::json;

TEST_CASE("curve spec grammar") {
    const auto t = io::parse_curve_spec("tate:-5/16,1/64");
    REQUIRE(t.tate.has_value());
    CHECK(*t.tate == TateCurve{R(-5, 16), R(1, 64)});
    CHECK(t.curve == e516());

    const auto l = io::parse_curve_spec("long:0,0,0,-1,0");
    CHECK_FALSE(l.tate.has_value());
    CHECK(l.curve == WeierstrassCurve{0, 0, 0, -1, 0});

    for (const char* bad : {"tate:1", "tate:1,2,3", "long:1,2", "weird:1,2", "tate1,2", "tate:1/0,2", "tate:x,1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(io::parse_curve_spec(bad), UsageError);
    }
}

TEST_CASE("points serialise as rational strings") {
    CHECK(io::point_to_json({R(1, 64), R(-1, 128)}) == json{{"x", "1/64"}, {"y", "-1/128"}});
    CHECK(io::point_to_json(CurvePoint::infinity()) == json("infinity"));
    CHECK(io::point_from_json(json::parse(R"({"x": "2/64", "y": 3})")) == CurvePoint{R(1, 32), 3});
    CHECK_THROWS_AS(io::point_from_json(json::parse(R"({"x": "1"})")), UsageError);
    CHECK_THROWS_AS(io::point_from_json(json::parse(R"({"x": 0.5, "y": 1})")), UsageError);
    CHECK_THROWS_AS(io::points_from_json(json::parse(R"({"x": 1, "y": 1})")), UsageError);
}

TEST_CASE("random round trips through JSON text") {
    Rng rng(161803);
    for (int i = 0; i < 300; ++i) {
        const Rational a1 = random_rational(rng, 100000, 100000), a2 = random_rational(rng),
                       a3 = random_rational(rng), a4 = random_rational(rng), a6 = random_rational(rng);
        const WeierstrassCurve c{a1, a2, a3, a4, a6};
        CHECK(io::curve_from_json(json::parse(io::curve_to_json(c).dump())).curve == c);
        const TateCurve t{a1, random_nonzero(rng)};
        const auto back = io::curve_from_json(json::parse(io::curve_to_json(t).dump()));
        REQUIRE(back.tate.has_value());
        CHECK(*back.tate == t);

        std::vector<CurvePoint> pts{CurvePoint::infinity()};
        for (int k = 0; k < 4; ++k) pts.emplace_back(random_rational(rng), random_rational(rng));
        CHECK(io::points_from_json(json::parse(io::points_to_json(pts).dump())) == pts);
    }
}

TEST_CASE("case results and summaries") {
    const auto report = run_search(4);
    const json first = io::to_json(report.cases.front());
    for (const char* key : {"case_index", "n", "shape", "beta", "verdict"}) CHECK(first.contains(key));
    for (const auto* c : report.accepted()) {
        const json j = io::to_json(*c);
        CHECK(j.at("verdict") == "Accepted");
        CHECK(io::points_from_json(j.at("points")) == c->points);
        CHECK(*io::curve_from_json(j.at("curve")).tate == *c->curve);
    }
    const json s = io::summary_json(4, report.counts(), report.cases.size());
    CHECK(s.at("summary").at("cases") == 12);
    CHECK(s.at("summary").at("verdicts").at("Accepted") == 9);
    CHECK(s.at("summary").at("verdicts").at("Family") == 0);

    const std::string csv = io::accepted_csv(report);
    CHECK(csv.rfind("beta_2,beta_3,a,b\n", 0) == 0);
    CHECK(csv.find("1,-1,-5/16,1/64\n") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}

TEST_CASE("certificate JSON carries the ascending differences") {
    const auto cert = certify_simultaneous(e516_progression());
    REQUIRE(cert.has_value());
    const json j = io::to_json(*cert);
    CHECK(j.at("x_cert").at("difference") == "1/64");
    CHECK(j.at("y_cert").at("difference") == "1/128");
    CHECK(io::points_from_json(j.at("points")) == e516_progression());
}

TEST_CASE("missing files are usage errors") {
    CHECK_THROWS_AS(io::read_file("/nonexistent/tateap/points.json"), UsageError);
}
