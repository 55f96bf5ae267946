#include <doctest.h>

#include <algorithm>
#include <set>

#include "tateap/curve.hpp"
#include "tateap/error.hpp"
#include "tateap/explore.hpp"
#include "tateap/progression.hpp"
#include "test_support.hpp"

using namespace tateap;
using namespace tateap::testing;

namespace {

bool has(const std::vector<CurvePoint>& v, const CurvePoint& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

TEST_CASE("bound 1 on a single seed gives the seed and its negative") {
    const CurvePoint p{R(1, 64), 0};
    const auto pts = generate_points(e516(), {{p}, 1, 1});
    CHECK(std::set<CurvePoint>(pts.begin(), pts.end()) == std::set<CurvePoint>{p, negate(e516(), p)});
}

TEST_CASE("generation errors") {
    CHECK_THROWS_AS(generate_points(e516(), {{CurvePoint{1, 1}}, 2, 1}), DomainError);
    CHECK_THROWS_AS(generate_points(e516(), {{CurvePoint{0, 0}}, 0, 1}), UsageError);
    CHECK_THROWS_AS(generate_points(e516(), {{CurvePoint{0, 0}}, 2, 0}), UsageError);
}

TEST_CASE("E(-5/16, 1/64) recovers the three extra points and the bounds") {
    const auto report = explore(e516(), {e516_progression(), 8, 2});
    for (const auto& p : e516_extras()) CHECK(has(report.points_found, p));
    CHECK(report.bounds.s_x_lower >= 6);
    CHECK(report.bounds.s_y_lower >= 7);
    CHECK(report.has_simultaneous_of.at(5));
    CHECK_FALSE(find_simultaneous(e516_listed(), 6).has_value());
}

TEST_CASE("E(-5/3, -1/6) exploration") {
    const auto report = explore(e53(), {e53_progression(), 8, 2});
    for (const auto& p : report.points_found) CHECK(contains(e53(), p));
    CHECK(report.bounds.s_x_lower >= 5);
    CHECK(report.bounds.s_y_lower >= 5);
    CHECK(report.has_simultaneous_of.at(5));
}

TEST_CASE("generated sets are closed under negation and on the curve") {
    const auto pts = generate_points(e53(), {e53_progression(), 3, 2});
    const std::set<CurvePoint> s(pts.begin(), pts.end());
    CHECK(s.size() == pts.size());
    for (const auto& p : pts) {
        CHECK(contains(e53(), p));
        CHECK(s.count(negate(e53(), p)) == 1);
    }
}

TEST_CASE("bounds are monotone in the coefficient bound") {
    std::size_t sx = 0, sy = 0;
    for (int bound = 1; bound <= 5; ++bound) {
        const auto r = explore(e516(), {e516_progression(), bound, 2});
        CHECK(r.bounds.s_x_lower >= sx);
        CHECK(r.bounds.s_y_lower >= sy);
        sx = r.bounds.s_x_lower;
        sy = r.bounds.s_y_lower;
        CHECK(sx >= 5);
    }
}

TEST_CASE("seeds alone give bounds at least the progression length") {
    const auto r = explore(e516(), {e516_progression(), 1, 1});
    CHECK(r.bounds.s_x_lower >= 5);
    CHECK(r.bounds.s_y_lower >= 5);
}

TEST_CASE("length-3 family") {
    const auto f = family3_curve(1);
    CHECK(f.curve == WeierstrassCurve{1, -1, 1, 0, 0});
    CHECK(f.points[0] == CurvePoint{0, -1});
    CHECK(f.points[1] == CurvePoint{1, 0});
    CHECK(f.points[2] == CurvePoint{2, 1});
    CHECK_THROWS_AS(family3_curve(0), DomainError);

    Rng rng(2718);
    int checked = 0;
    while (checked < 200) {
        const Rational b = random_nonzero(rng);
        if (discriminant(TateCurve{2 * b - 1, b}.weierstrass()).is_zero()) {
            CHECK_THROWS_AS(family3_curve(b), DomainError);
            continue;
        }
        const auto g = family3_curve(b);
        CHECK(g.certificate.x_cert.length == 3);
        for (const auto& p : g.points) {
            CHECK(contains(g.curve, p));
            CHECK(p.y() == p.x() - b);
        }
        ++checked;
    }
}

TEST_CASE("table rows dominate the reference bounds" * doctest::timeout(120)) {
    struct Reference {
        Rational a, b;
        std::size_t sx, sy;
    };
    const std::vector<Reference> reference{
        {R(-5, 3), R(-1, 6), 5, 5},    {R(-7, 15), R(4, 15), 5, 4},  {R(-29, 48), R(7, 192), 4, 4},
        {R(-7, 9), R(2, 27), 4, 5},    {R(-5, 16), R(1, 64), 6, 7},  {R(-7, 45), R(-1, 270), 4, 4},
        {R(29, 96), R(-5, 128), 4, 4}, {R(1, 3), R(1, 6), 4, 5},     {R(25, 21), R(-2, 7), 6, 4},
    };
    const auto rows = reproduce_table();
    REQUIRE(rows.size() == 9);
    for (const auto& p : reference) {
        const auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) {
            return r.curve == TateCurve{p.a, p.b};
        });
        REQUIRE(it != rows.end());
        CAPTURE(it->curve.a);
        CHECK(it->bounds.s_x_lower >= p.sx);
        CHECK(it->bounds.s_y_lower >= p.sy);
    }
}
