"""Exact d-elliptic locus classes on moduli of genus-2 and genus-3 curves.

All numbers are returned as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import _delliptic as _core
from ._delliptic import CrossCheckFailure, Error, PreconditionError

__all__ = [
    "CrossCheckFailure",
    "Error",
    "PreconditionError",
    "class_of",
    "class_str",
    "count",
    "eisenstein",
    "family_labels",
    "fit",
    "hurwitz_number",
    "series",
    "verify",
]


def family_labels(family: str) -> list[str]:
    return list(_core.family_labels(family))


def class_of(family: str, d: int) -> dict[str, Fraction]:
    """Class of the degree-d locus of a family (m2, m2e, m21, m3) in the Q-class basis."""
    return {label: Fraction(v) for label, v in _core.class_coeffs(family, d)}


def class_str(family: str, d: int) -> str:
    return _core.class_str(family, d)


def series(family: str, label: str, order: int) -> list[Fraction]:
    """Coefficients 0..order of the generating series of one class coefficient."""
    return [Fraction(c) for c in _core.coefficient_series(family, label, order)]


def eisenstein(k: int, order: int) -> list[Fraction]:
    return [Fraction(c) for c in _core.eisenstein(k, order)]


def fit(coeffs, weight: int = 6, order: int | None = None):
    """Fit a series against E2^a E4^b E6^c of weight <= weight.

    Returns {(a, b, c): Fraction} on success and None when the series is not
    quasimodular at this weight and order.
    """
    coeffs = [str(Fraction(c)) for c in coeffs]
    if order is None:
        order = len(coeffs) - 1
    res = json.loads(_core.fit_json(coeffs, weight, order))
    if "not_quasimodular" in res:
        return None
    return {(m["a"], m["b"], m["c"]): Fraction(m["coeff"]) for m in res["monomials"]}


def hurwitz_number(d: int, profiles) -> Fraction:
    """Profiles are partitions, given as sequences of parts or as strings like "3,1,1"."""
    ps = [p if isinstance(p, str) else ",".join(str(x) for x in p) for p in profiles]
    return Fraction(_core.hurwitz_number(d, ps))


def count(kind: str, d: int) -> int:
    """kind is one of sublattices, pointed-isogenies, dd22, dd2222."""
    return int(_core.count(kind, d))


def verify(max_d: int = 10, order: int = 30, weight: int = 6, inject=()) -> dict:
    """Run the verification suite and return its JSON report as a dict."""
    return json.loads(_core.verify_json(max_d, order, weight, list(inject)))
