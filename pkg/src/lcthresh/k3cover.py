"""Cyclic covers ``t^m = -f`` for thresholds of the form ``1 - 1/m``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomial import Polynomial, weighted_degree, weighted_order
from .threshold import format_rational, lct_candidate, standard_form
from .weights import Weight

COVER_VARIABLE_PREFERENCE = "twuv"


class NonStandardThreshold(ValueError):
    """The candidate is not ``1 - 1/m`` for an integer ``m``."""


@dataclass(frozen=True)
class K3CoverRecord:
    m: int
    cover_poly: Polynomial
    weight4: Weight
    degree: int
    normalized_sum: Fraction
    yonemura_tag: int | None = None

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "coverPoly": str(self.cover_poly),
            "weight4": list(self.weight4),
            "degree": self.degree,
            "normalizedSum": format_rational(self.normalized_sum),
            "yonemura": self.yonemura_tag,
        }


def _cover_variables(variables: str) -> str:
    for v in COVER_VARIABLE_PREFERENCE:
        if v not in variables:
            return variables + v
    raise ValueError(f"no free letter for the cover coordinate beside {variables!r}")


def k3_cover(f: Polynomial, w: Weight | Sequence[int], yonemura: int | None = None) -> K3CoverRecord:
    """Hypersurface ``g = f + t^m`` with ``t`` weighted ``ord_w f - sum(w)``."""
    report = lct_candidate(f, w)
    c = report.candidate
    m = standard_form(c) if 0 < c < 1 else None
    if m is None:
        raise NonStandardThreshold(f"c = {format_rational(c)} is not of the form 1 - 1/m")
    d = report.order
    w_t = d - report.weight.total()
    if w_t < 1 or d % w_t or d // w_t != m:
        raise ArithmeticError(f"cover exponent mismatch: d={d}, w_t={w_t}, m={m}")
    variables = _cover_variables(f.variables)
    lifted = f.with_variables(variables)
    t_power = Polynomial.monomial(variables, [0] * f.arity + [m])
    g = lifted + t_power
    weight4 = Weight(report.weight.entries + (w_t,))
    normalized = Fraction(weight4.total(), d)
    if normalized != 1 or weighted_order(g, weight4) != d or weighted_degree([0] * f.arity + [m], weight4) != d:
        raise ArithmeticError(f"cover of {f} fails the weight check")
    return K3CoverRecord(m=m, cover_poly=g, weight4=weight4, degree=d, normalized_sum=normalized, yonemura_tag=yonemura)
