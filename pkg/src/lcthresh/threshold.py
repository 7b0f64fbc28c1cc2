"""Log canonical threshold candidates from weighted blowups.

For a weight ``w`` with ``d = ord_w f`` the exceptional divisor of the
w-blowup has discrepancy ``a(S, tF) = sum(w) - 1 - t d``; it reaches ``-1`` at
``t = sum(w) / d``, which bounds the threshold from above.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from .polynomial import (
    Polynomial,
    binary_form_max_multiplicity,
    homogeneous_part,
    multiplicity,
    parse,
    project,
    ternary_cubic_repeated_factor,
    weighted_order,
    weighted_part,
)
from .weights import Weight, as_weight

DEFAULT_SEARCH_BOUND = 30

# Sample equations for the five non-exceptional resolution types (f_3 = z^3).
NON_EXCEPTIONAL_PATTERNS: tuple[tuple[str, str], ...] = (
    ("2A_{1*o}A_{4*o}", "z^3+y^4+x^2y^2+x^3z"),
    ("2A_{1*o}E_{6o}", "z^3+y^4+x^2y^2+x^5"),
    ("2A_{4*o}", "z^3+x^2y^2+x^3z+y^3z"),
    ("A_{4*o}E_{6o}", "z^3+x^2y^2+x^5+y^3z"),
    ("2E_{6o}", "z^3+x^2y^2+x^5+y^5"),
)


@dataclass(frozen=True)
class ThresholdReport:
    """Upper bound for the threshold coming from a single weighted blowup."""

    weight: Weight
    order: int
    candidate: Fraction
    discrepancy_intercept: Fraction
    discrepancy_slope: Fraction

    def to_json(self) -> dict:
        return {
            "weight": list(self.weight),
            "order": self.order,
            "candidate": format_rational(self.candidate),
            "discrepancyIntercept": format_rational(self.discrepancy_intercept),
            "discrepancySlope": format_rational(self.discrepancy_slope),
        }


class VerdictKind(str, enum.Enum):
    LOG_CANONICAL = "LogCanonical"
    NON_EXCEPTIONAL = "NonExceptional"
    EXCEPTIONAL = "Exceptional"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    threshold: Fraction
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "threshold": format_rational(self.threshold), "detail": self.detail}


class NormalizationRequired(ValueError):
    """The cubic part has a triple factor that is not the line ``z = 0``."""


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def lct_candidate(f: Polynomial, w: Weight | Sequence[int]) -> ThresholdReport:
    """Candidate ``sum(w) / ord_w f`` together with the affine discrepancy data."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    w = as_weight(w)
    if len(w) != f.arity:
        raise ValueError(f"weight length {len(w)} does not match arity {f.arity}")
    if f.coefficient((0,) * f.arity):
        raise ValueError(f"{f} does not vanish at the origin")
    d = weighted_order(f, w)
    s = w.total()
    return ThresholdReport(
        weight=w,
        order=d,
        candidate=Fraction(s, d),
        discrepancy_intercept=Fraction(s - 1),
        discrepancy_slope=Fraction(-d),
    )


def discrepancy(report: ThresholdReport, t: Fraction | int) -> Fraction:
    return report.discrepancy_intercept + report.discrepancy_slope * Fraction(t)


def weight_search(f: Polynomial, bound: int) -> tuple[Weight, Fraction]:
    """Minimize the candidate over primitive weights with entries in ``[1, bound]``.

    Ties go to the lexicographically smallest weight.
    """
    if bound < 1:
        raise ValueError("search bound must be at least 1")
    lct_candidate(f, (1,) * f.arity)  # validates f
    n = f.arity
    exps = np.array(sorted(f.support()), dtype=np.int64)
    weights = np.array(list(product(range(1, bound + 1), repeat=n)), dtype=np.int64)
    weights = weights[np.gcd.reduce(weights, axis=1) == 1]
    orders = (weights @ exps.T).min(axis=1)
    sums = weights.sum(axis=1)
    # floats only prefilter; distinct candidates differ by at least 1/(d1*d2)
    ratios = sums / orders
    close = np.flatnonzero(ratios <= ratios.min() * (1 + 1e-12))
    best_idx = int(close[0])
    best = Fraction(int(sums[best_idx]), int(orders[best_idx]))
    for idx in close[1:]:
        cand = Fraction(int(sums[idx]), int(orders[idx]))
        if cand < best:
            best, best_idx = cand, int(idx)
    return Weight(tuple(int(v) for v in weights[best_idx])), best


def standard_form(c: Fraction) -> int | None:
    """``m`` with ``c = 1 - 1/m`` when it exists."""
    c = Fraction(c)
    if not 0 < c < 1:
        raise ValueError(f"standard form is defined for 0 < c < 1, got {c}")
    m = 1 / (1 - c)
    return m.numerator if m.denominator == 1 else None


def shokurov_form(c: Fraction) -> int | None:
    """``n >= 2`` with ``c = 1/2 + 1/n`` when it exists."""
    c = Fraction(c)
    excess = c - Fraction(1, 2)
    if excess <= 0:
        return None
    n = 1 / excess
    if n.denominator == 1 and n.numerator >= 2:
        return n.numerator
    return None


def _match_pattern(f: Polynomial) -> str | None:
    support = f.support()
    for name, text in NON_EXCEPTIONAL_PATTERNS:
        if parse(text, f.variables).support() <= support:
            return name
    return None


def exceptionality_verdict(f: Polynomial, bound: int = DEFAULT_SEARCH_BOUND) -> Verdict:
    """Decide which case of the trichotomy a sample equation falls into.

    Only sample-form inputs are handled: when the cubic part has a triple
    factor it must already be a multiple of ``z^3``.
    """
    if f.arity != 3:
        raise ValueError("the trichotomy concerns surfaces in 3-space")
    if multiplicity(f) == 3:
        cubic = homogeneous_part(f, 3)
        if ternary_cubic_repeated_factor(cubic) == "triple":
            if set(cubic.support()) != {(0, 0, 3)}:
                raise NormalizationRequired(
                    f"cubic part {cubic} has a triple factor; change coordinates so it becomes z^3"
                )
            initial = weighted_part(f, (3, 3, 4))
            quartic = initial - Polynomial._raw(f.variables, {(0, 0, 3): cubic.coefficient((0, 0, 3))})
            f4_mult = binary_form_max_multiplicity(project(quartic, f.variables[:2])) if quartic else 4
            if f4_mult == 2:
                shape = _match_pattern(f)
                detail = f"f_4 = {quartic} has a double, not triple, factor"
                detail += f"; matches {shape}" if shape else "; no listed sample pattern matched"
                return Verdict(VerdictKind.NON_EXCEPTIONAL, Fraction(5, 6), detail)
    w, c = weight_search(f, bound)
    if c >= 1:
        return Verdict(VerdictKind.LOG_CANONICAL, Fraction(1), f"weight ({w}) gives bound {format_rational(c)} >= 1")
    return Verdict(VerdictKind.EXCEPTIONAL, c, f"certified by weight ({w})")
