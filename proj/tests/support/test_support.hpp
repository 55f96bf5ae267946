#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tateap/curve.hpp"
#include "tateap/rational.hpp"

namespace tateap::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_abs_num = 50, long max_den = 50) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return {num(rng), den(rng)};
}

inline Rational random_nonzero(Rng& rng, long max_abs_num = 50, long max_den = 50) {
    for (;;) {
        Rational r = random_rational(rng, max_abs_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline bool canonical(const Rational& r) {
    if (r.den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return g == 1;
}

inline Rational R(long n, long d = 1) { return {n, d}; }

// Known points on E(-5/16, 1/64): the simultaneous progression of
// length 5 followed by the three extra points.
inline std::vector<CurvePoint> e516_progression() {
    return {{0, R(-2, 128)}, {R(1, 64), 0}, {R(2, 64), R(-1, 128)}, {R(3, 64), R(1, 128)}, {R(4, 64), R(2, 128)}};
}

inline std::vector<CurvePoint> e516_extras() {
    return {{R(1, 8), R(-4, 128)}, {R(-1, 32), R(-3, 128)}, {R(5, 64), R(-1, 64)}};
}

inline std::vector<CurvePoint> e516_listed() {
    auto pts = e516_progression();
    for (const auto& p : e516_extras()) pts.push_back(p);
    return pts;
}

inline std::vector<CurvePoint> e53_progression() {
    return {{0, R(1, 6)}, {R(-1, 6), 0}, {R(-2, 6), R(-2, 6)}, {R(-3, 6), R(-1, 6)}, {R(-4, 6), R(-3, 6)}};
}

inline WeierstrassCurve e516() { return TateCurve{R(-5, 16), R(1, 64)}.weierstrass(); }
inline WeierstrassCurve e53() { return TateCurve{R(-5, 3), R(-1, 6)}.weierstrass(); }

}  // namespace tateap::testing
