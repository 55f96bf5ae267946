from fractions import Fraction

import pytest

import tateap
from tateap import Curve, Point, Rational


def test_rational_basics():
    r = Rational(6, -4)
    assert str(r) == "-3/2"
    assert r == Fraction(-3, 2)
    assert tateap.to_fraction(r + 1) == Fraction(-1, 2)
    assert Rational(10**30) * 2 == 2 * 10**30
    with pytest.raises(tateap.DomainError):
        Rational(1) / 0
    with pytest.raises(tateap.UsageError):
        Rational("1.5")


def test_group_law_fixture():
    e = Curve.tate("-5/16", "1/64")
    p, q = Point(0, "-1/64"), Point("1/64", 0)
    assert e.contains(p) and e.contains(q)
    s = e.add(p, q)
    assert (s.x, s.y) == (Fraction(11, 16), Fraction(-121, 256))
    assert e.scalar_mul(2, Point(0, 0)) == Point("1/64", "-11/1024")
    assert e.add(p, e.negate(p)).is_infinity
    assert e.discriminant() == Fraction(-18047, 17179869184)
    with pytest.raises(tateap.DomainError):
        e.negate(Point(1, 1))


def test_length5_search():
    out = tateap.search(5, jobs=2)
    assert len(out["cases"]) == 60
    assert out["summary"]["verdicts"]["Accepted"] == 2
    curves = {(c["curve"]["tate"]["a"], c["curve"]["tate"]["b"]) for c in out["cases"] if c["verdict"] == "Accepted"}
    assert curves == {("-5/3", "-1/6"), ("-5/16", "1/64")}
    with pytest.raises(tateap.UsageError):
        tateap.search(2)


def test_certificate_and_bounds():
    pts = [Point(0, "-2/128"), Point("1/64", 0), Point("2/64", "-1/128"), Point("3/64", "1/128"), Point("4/64", "2/128")]
    cert = tateap.certify_simultaneous(pts)
    assert cert["x_cert"]["difference"] == "1/64"
    assert tateap.certify_simultaneous(pts[:2] + [Point(1, 1)]) is None
    first, diff, length, members = tateap.longest_ap_subset([0, 5, 1, 9, 2, 3])
    assert (first, diff, length) == (0, 1, 4)
    extras = [Point("1/8", "-4/128"), Point("-1/32", "-3/128"), Point("5/64", "-1/64")]
    b = tateap.bounds(pts + extras)
    assert (b["s_x_lower"], b["s_y_lower"]) == (6, 7)


def test_explore_and_family():
    e = Curve.from_spec("tate:-5/16,1/64")
    seeds = [Point(0, "-2/128"), Point("1/64", 0), Point("2/64", "-1/128"), Point("3/64", "1/128"), Point("4/64", "2/128")]
    report = tateap.explore(e, seeds, bound=3, combo=2)
    assert all(e.contains(p) for p in report["points"])
    assert report["bounds"]["s_x_lower"] >= 5
    f = tateap.family3("3/7")
    assert f["certificate"]["x_cert"]["length"] == 3


def test_parametric():
    cases = tateap.parametric_search()
    assert len(cases) == 60
    assert not any(c["verdict"] == "Accepted" for c in cases)
