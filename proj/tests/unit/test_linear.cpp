#include <doctest.h>

#include "tateap/error.hpp"
#include "tateap/linear.hpp"
#include "test_support.hpp"

using namespace tateap;
using tateap::testing::R;

namespace {

// Laplace expansion along the first row; independent of elimination.
Rational cofactor_det(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rational acc;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        RationalMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t k = 0, kk = 0; k < n; ++k) {
                if (k != c) minor(r - 1, kk++) = m(r, k);
            }
        }
        const Rational term = m(0, c) * cofactor_det(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("length-4 system with (beta2, beta3) = (1, -1) has a unique solution") {
    const RationalMatrix m{{1, 0, 16}, {0, -1, 72}, {3, -2, 0}};
    const std::vector<Rational> rhs{0, 0, -3};
    const auto out = solve_linear(m, rhs);
    REQUIRE(out.kind == LinearKind::Unique);
    CHECK(out.solution == std::vector<Rational>{R(-1, 4), R(9, 8), R(1, 64)});
    // Back-substitution.
    CHECK(m.apply(out.solution) == rhs);
}

TEST_CASE("identity system") {
    const auto out = solve_linear(RationalMatrix::identity(2), std::vector<Rational>{5, 7});
    REQUIRE(out.kind == LinearKind::Unique);
    CHECK(out.solution == std::vector<Rational>{5, 7});
}

TEST_CASE("length-4 system with (-2/3, -2) is a one-parameter family") {
    const Rational b2 = R(-2, 3), b3 = R(-2);
    const RationalMatrix m{{b2, 0, 16}, {0, b3, 72}, {3, -2, 0}};
    const std::vector<Rational> rhs{0, 0, 2 - 3 * b2 + 2 * b3};
    const auto out = solve_linear(m, rhs);
    CHECK(out.kind == LinearKind::Family);
    CHECK(out.free_variables == 1);
    CHECK(out.rank == 2);
    CHECK(m.apply(out.solution) == rhs);
}

TEST_CASE("beta2 = beta3/3 off the family point is inconsistent") {
    const RationalMatrix m{{1, 0, 16}, {0, 3, 72}, {3, -2, 0}};
    const std::vector<Rational> rhs{0, 0, 2 - 3 + 6};
    CHECK(solve_linear(m, rhs).kind == LinearKind::Inconsistent);
}

TEST_CASE("overdetermined consistent and inconsistent systems") {
    const RationalMatrix m{{1, 1}, {1, -1}, {2, 0}};
    CHECK(solve_linear(m, std::vector<Rational>{3, 1, 4}).kind == LinearKind::Unique);
    CHECK(solve_linear(m, std::vector<Rational>{3, 1, 5}).kind == LinearKind::Inconsistent);
}

TEST_CASE("dimension mismatch is a usage error") {
    CHECK_THROWS_AS(solve_linear(RationalMatrix::identity(2), std::vector<Rational>{1}), UsageError);
    CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), UsageError);
    CHECK_THROWS_AS(RationalMatrix(2, 2, std::vector<Rational>(3)), UsageError);
}

TEST_CASE("determinant small cases") {
    CHECK(determinant(RationalMatrix{{R(7, 3)}}) == R(7, 3));
    CHECK(determinant(RationalMatrix{{1, 2}, {3, 4}}) == R(-2));
    CHECK(determinant(RationalMatrix{{0, 1}, {1, 0}}) == R(-1));
    CHECK(determinant(RationalMatrix{{1, 2}, {2, 4}}) == R(0));
}

TEST_CASE("parametric augmented matrix for beta = (4,6,8)(a+1) at a = 0") {
    // Rows: quadrics k = 2, 3, 4 then hyperplanes k = 3, 4; columns alpha2..4, b, rhs.
    const RationalMatrix m{{4, 0, 0, 16, 0},
                           {0, 6, 0, 72, 0},
                           {0, 0, 8, 192, 0},
                           {3, -2, 0, 0, 2 - 3 * 4 + 2 * 6},
                           {4, 0, -2, 0, 4 - 4 * 4 + 2 * 8}};
    CHECK(determinant(m).abs() == R(3072));
    CHECK(determinant(m) == cofactor_det(m));
}

TEST_CASE("elimination determinant agrees with cofactor expansion") {
    tateap::testing::Rng rng(77);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> sparse(0, 3);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(dim(rng));
        RationalMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (sparse(rng) != 0) m(r, c) = tateap::testing::random_rational(rng, 9, 6);
            }
        }
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("unique solutions have zero residual") {
    tateap::testing::Rng rng(99);
    std::uniform_int_distribution<int> dim(1, 6);
    int unique = 0;
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(dim(rng));
        const std::size_t extra = static_cast<std::size_t>(dim(rng) % 3);
        RationalMatrix m(n + extra, n);
        std::vector<Rational> x(n);
        for (auto& v : x) v = tateap::testing::random_rational(rng, 20, 9);
        for (std::size_t r = 0; r < n + extra; ++r) {
            for (std::size_t c = 0; c < n; ++c) m(r, c) = tateap::testing::random_rational(rng, 5, 4);
        }
        const auto rhs = m.apply(x);
        const auto out = solve_linear(m, rhs);
        REQUIRE(out.kind != LinearKind::Inconsistent);
        CHECK(m.apply(out.solution) == rhs);
        if (out.kind == LinearKind::Unique) {
            ++unique;
            CHECK(out.solution == x);
        } else {
            CHECK(out.free_variables == n - rank(m));
        }
    }
    CHECK(unique > 200);
}
