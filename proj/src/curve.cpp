#include "tateap/curve.hpp"

#include "tateap/error.hpp"

namespace tateap {

std::string CurvePoint::str() const {
    if (!affine_) return "infinity";
    return "(" + x_.str() + ", " + y_.str() + ")";
}

std::strong_ordering operator<=>(const CurvePoint& p, const CurvePoint& q) {
    if (p.affine_ != q.affine_) return p.affine_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!p.affine_) return std::strong_ordering::equal;
    if (auto c = p.x_ <=> q.x_; c != 0) return c;
    return p.y_ <=> q.y_;
}

Rational WeierstrassCurve::b2() const { return a1 * a1 + 4 * a2; }
Rational WeierstrassCurve::b4() const { return 2 * a4 + a1 * a3; }
Rational WeierstrassCurve::b6() const { return a3 * a3 + 4 * a6; }
Rational WeierstrassCurve::b8() const {
    return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}

Rational discriminant(const WeierstrassCurve& c) {
    const Rational b2 = c.b2(), b4 = c.b4(), b6 = c.b6(), b8 = c.b8();
    return -b2 * b2 * b8 - 8 * b4.pow(3) - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool contains(const WeierstrassCurve& c, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    const Rational& x = p.x();
    const Rational& y = p.y();
    return y * y + c.a1 * x * y + c.a3 * y == ((x + c.a2) * x + c.a4) * x + c.a6;
}

namespace {

void require_on(const WeierstrassCurve& c, const CurvePoint& p) {
    if (!contains(c, p)) throw DomainError("point " + p.str() + " is not on the curve");
}

CurvePoint negate_unchecked(const WeierstrassCurve& c, const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return {p.x(), -p.y() - c.a1 * p.x() - c.a3};
}

CurvePoint add_unchecked(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rational& x1 = p.x();
    const Rational& y1 = p.y();
    const Rational& x2 = q.x();
    const Rational& y2 = q.y();

    if (x1 == x2 && y1 + y2 + c.a1 * x2 + c.a3 == 0) return CurvePoint::infinity();

    Rational slope, intercept;
    if (x1 != x2) {
        const Rational dx = x2 - x1;
        slope = (y2 - y1) / dx;
        intercept = (y1 * x2 - y2 * x1) / dx;
    } else {
        // Same x and not opposite: p == q, tangent line.
        const Rational denom = 2 * y1 + c.a1 * x1 + c.a3;
        slope = (3 * x1 * x1 + 2 * c.a2 * x1 + c.a4 - c.a1 * y1) / denom;
        intercept = (-x1 * x1 * x1 + c.a4 * x1 + 2 * c.a6 - c.a3 * y1) / denom;
    }
    Rational x3 = slope * slope + c.a1 * slope - c.a2 - x1 - x2;
    Rational y3 = -(slope + c.a1) * x3 - intercept - c.a3;
    return {std::move(x3), std::move(y3)};
}

}  // namespace

CurvePoint negate(const WeierstrassCurve& c, const CurvePoint& p) {
    require_on(c, p);
    return negate_unchecked(c, p);
}

CurvePoint add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q) {
    require_on(c, p);
    require_on(c, q);
    return add_unchecked(c, p, q);
}

CurvePoint scalar_mul(const WeierstrassCurve& c, std::int64_t k, const CurvePoint& p) {
    require_on(c, p);
    if (k == 0 || p.is_infinity()) return CurvePoint::infinity();
    CurvePoint base = k < 0 ? negate_unchecked(c, p) : p;
    auto n = static_cast<std::uint64_t>(k < 0 ? -(k + 1) : k - 1) + 1;
    CurvePoint acc;
    while (n > 0) {
        if ((n & 1U) != 0) acc = add_unchecked(c, acc, base);
        n >>= 1U;
        if (n > 0) base = add_unchecked(c, base, base);
    }
    return acc;
}

CoordChange CoordChange::inverse() const {
    if (u.is_zero()) throw UsageError("coordinate change with u = 0");
    const Rational ui = u.inverse();
    return {ui, -r * ui * ui, -s * ui, (r * s - t) * ui.pow(3)};
}

WeierstrassCurve transform(const WeierstrassCurve& c, const CoordChange& ch) {
    if (ch.u.is_zero()) throw UsageError("coordinate change with u = 0");
    const Rational& u = ch.u;
    const Rational& r = ch.r;
    const Rational& s = ch.s;
    const Rational& t = ch.t;
    WeierstrassCurve out;
    out.a1 = (c.a1 + 2 * s) / u;
    out.a2 = (c.a2 - s * c.a1 + 3 * r - s * s) / u.pow(2);
    out.a3 = (c.a3 + r * c.a1 + 2 * t) / u.pow(3);
    out.a4 = (c.a4 - s * c.a3 + 2 * r * c.a2 - (t + r * s) * c.a1 + 3 * r * r - 2 * s * t) / u.pow(4);
    out.a6 = (c.a6 + r * c.a4 + r * r * c.a2 + r.pow(3) - t * c.a3 - t * t - r * t * c.a1) / u.pow(6);
    return out;
}

CurvePoint transform_point(const CoordChange& ch, const CurvePoint& p) {
    if (ch.u.is_zero()) throw UsageError("coordinate change with u = 0");
    if (p.is_infinity()) return p;
    const Rational dx = p.x() - ch.r;
    Rational x = dx / ch.u.pow(2);
    Rational y = (p.y() - ch.s * dx - ch.t) / ch.u.pow(3);
    return {std::move(x), std::move(y)};
}

std::array<CurvePoint, 3> tate_points(const TateCurve& c) {
    if (c.b.is_zero()) throw DomainError("Tate curve with b = 0");
    return {CurvePoint{0, 0}, CurvePoint{c.b, 0}, CurvePoint{0, -c.b}};
}

std::optional<TateCurve> as_tate(const WeierstrassCurve& c) {
    if (!c.a4.is_zero() || !c.a6.is_zero() || c.a2 != -c.a3) return std::nullopt;
    return TateCurve{c.a1, c.a3};
}

}  // namespace tateap
