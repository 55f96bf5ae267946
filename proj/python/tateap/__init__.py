"""Exact search for simultaneous arithmetic progressions on elliptic curves."""

import json
from fractions import Fraction

from ._tateap import (
    Curve,
    DomainError,
    Point,
    Rational,
    UsageError,
    certify_ap,
    longest_ap_subset,
)
from . import _tateap

__all__ = [
    "Curve",
    "DomainError",
    "Point",
    "Rational",
    "UsageError",
    "bounds",
    "certify_ap",
    "certify_simultaneous",
    "explore",
    "family3",
    "longest_ap_subset",
    "parametric_search",
    "reproduce_table",
    "search",
    "to_fraction",
]


def to_fraction(r):
    return Fraction(r.numerator, r.denominator)


def certify_simultaneous(points):
    """Certificate dict for the points, or None."""
    out = _tateap._certify_simultaneous(list(points))
    return None if out is None else json.loads(out)


def bounds(points):
    return json.loads(_tateap._bounds(list(points)))


def search(n, jobs=1):
    """All cases for progression length n plus a verdict summary."""
    return json.loads(_tateap._search(n, jobs))


def parametric_search():
    return json.loads(_tateap._parametric())


def explore(curve, seeds, bound=8, combo=2):
    """Report dict; report["points"] holds the generated points."""
    text, points = _tateap._explore(curve, list(seeds), bound, combo)
    report = json.loads(text)
    report["points"] = points
    return report


def family3(b):
    return json.loads(_tateap._family3(b))


def reproduce_table(bound=8, combo=3):
    return json.loads(_tateap._table(bound, combo))
