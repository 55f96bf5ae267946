#include <doctest.h>

#include <sstream>
#include <unordered_set>

#include "tateap/error.hpp"
#include "tateap/rational.hpp"
#include "test_support.hpp"

using namespace tateap;
using tateap::testing::canonical;
using tateap::testing::R;

TEST_CASE("construction canonicalises") {
    CHECK(R(6, -4).str() == "-3/2");
    CHECK(R(0, -7).str() == "0");
    CHECK(R(0, 5).den() == 1);
    CHECK(R(10, 5).str() == "2");
    CHECK(canonical(R(-18, 12)));
    CHECK_THROWS_AS(R(1, 0), DomainError);
}

TEST_CASE("parse accepts p, p/q and a leading minus") {
    CHECK(Rational::parse("-5/16") == R(-5, 16));
    CHECK(Rational::parse("7") == R(7));
    CHECK(Rational::parse("-0") == R(0));
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
}

TEST_CASE("parse rejects malformed input") {
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "+3", "1.5", " 1", "1/2/3", "a", "--1", "1/-2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), UsageError);
    }
}

TEST_CASE("str renders integers without denominator") {
    CHECK(R(0).str() == "0");
    CHECK(R(-3).str() == "-3");
    CHECK(R(-11, 1024).str() == "-11/1024");
    std::ostringstream os;
    os << R(1, 64);
    CHECK(os.str() == "1/64");
}

TEST_CASE("division by zero is a domain error") {
    CHECK_THROWS_AS(R(1) / R(0), DomainError);
    CHECK_THROWS_AS(R(0).inverse(), DomainError);
}

TEST_CASE("pow, abs, ordering") {
    CHECK(R(-2, 3).pow(3) == R(-8, 27));
    CHECK(R(5, 7).pow(0) == R(1));
    CHECK(R(-2, 3).abs() == R(2, 3));
    CHECK(R(-1, 2) < R(-1, 3));
    CHECK(R(1, 3) > R(1, 4));
}

TEST_CASE("random field identities stay exact and canonical") {
    tateap::testing::Rng rng(20240601);
    for (int i = 0; i < 2000; ++i) {
        const Rational x = tateap::testing::random_rational(rng, 1000, 1000);
        const Rational y = tateap::testing::random_nonzero(rng, 1000, 1000);
        const Rational sum = x + y, prod = x * y, quot = x / y, diff = x - y;
        CHECK(canonical(sum));
        CHECK(canonical(prod));
        CHECK(canonical(quot));
        CHECK(canonical(diff));
        CHECK((x + y) - y == x);
        CHECK((x * y) / y == x);
        CHECK(Rational::parse(x.str()) == x);
    }
}

TEST_CASE("equal rationals hash equally") {
    std::unordered_set<Rational> s{R(1, 2), R(2, 4), R(-3, 6), R(3, -6)};
    CHECK(s.size() == 2);
}
