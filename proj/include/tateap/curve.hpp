#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tateap/rational.hpp"

namespace tateap {

/// Affine rational point or the point at infinity (group identity).
class CurvePoint {
public:
    CurvePoint() = default;  // infinity
    CurvePoint(Rational x, Rational y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !affine_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    std::string str() const;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    /// Infinity first, then lexicographic by (x, y).
    friend std::strong_ordering operator<=>(const CurvePoint& p, const CurvePoint& q);

private:
    bool affine_ = false;
    Rational x_;
    Rational y_;
};

/// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6
struct WeierstrassCurve {
    Rational a1, a2, a3, a4, a6;

    Rational b2() const;
    Rational b4() const;
    Rational b6() const;
    Rational b8() const;

    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

/// E(a,b): Y^2 + aXY + bY = X^3 - bX^2
struct TateCurve {
    Rational a, b;

    WeierstrassCurve weierstrass() const { return {a, -b, b, 0, 0}; }

    friend bool operator==(const TateCurve&, const TateCurve&) = default;
    friend auto operator<=>(const TateCurve&, const TateCurve&) = default;
};

/// Admissible change of variables X = u^2 X' + r, Y = u^3 Y' + s u^2 X' + t.
struct CoordChange {
    Rational u = 1;
    Rational r, s, t;

    CoordChange inverse() const;
};

Rational discriminant(const WeierstrassCurve& c);

bool contains(const WeierstrassCurve& c, const CurvePoint& p);

/// -(x, y) = (x, -y - a1 x - a3). Throws DomainError when p is off the curve.
CurvePoint negate(const WeierstrassCurve& c, const CurvePoint& p);

/// Chord-tangent addition on the long Weierstrass model.
CurvePoint add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q);

/// [k]p by double-and-add; negative k goes through negate.
CurvePoint scalar_mul(const WeierstrassCurve& c, std::int64_t k, const CurvePoint& p);

WeierstrassCurve transform(const WeierstrassCurve& c, const CoordChange& t);

/// Image of a point of `c` on transform(c, t).
CurvePoint transform_point(const CoordChange& t, const CurvePoint& p);

/// The distinguished points (0,0), (b,0), (0,-b). b = 0 is a domain error.
std::array<CurvePoint, 3> tate_points(const TateCurve& c);

/// Tate parameters of a transformed Weierstrass model, when it has the
/// shape a2 = -a3, a4 = a6 = 0.
std::optional<TateCurve> as_tate(const WeierstrassCurve& c);

}  // namespace tateap
