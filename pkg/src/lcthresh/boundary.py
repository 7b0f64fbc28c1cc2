"""The log Enriques surface induced on the exceptional weighted plane.

On ``S = P(w')`` the different of ``c F_Y`` is ``c L + sum(delta_i L_i)`` where
``L_i`` are the coordinate lines and ``L`` is cut out by the residual part of
the initial form after the coordinate factors are removed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomial import Polynomial, divide_out_coordinate_factors, weighted_part
from .threshold import format_rational, lct_candidate
from .weights import Weight, WellFormedPlane, as_weight, rewrite_form, well_form

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LogEnriquesRecord:
    plane: WellFormedPlane
    c: Fraction
    delta: tuple[Fraction, Fraction, Fraction]
    contains_line: tuple[bool, bool, bool]
    residual_curve: Polynomial
    residual_degree: int

    @property
    def balance_defect(self) -> Fraction:
        return balance(self.c, self.residual_degree, self.delta, self.plane.well_formed)

    @property
    def klt_coefficients(self) -> bool:
        return all(0 <= d < 1 for d in self.delta)

    def to_json(self) -> dict:
        return {
            "weight": list(self.plane.original),
            "wellFormed": list(self.plane.well_formed),
            "pairGcds": list(self.plane.pair_gcds),
            "c": format_rational(self.c),
            "delta": [format_rational(d) for d in self.delta],
            "containsLine": list(self.contains_line),
            "ell": str(self.residual_curve),
            "residualDegree": self.residual_degree,
            "balanceDefect": format_rational(self.balance_defect),
        }


class NonKltBoundary(ValueError):
    """A different coefficient reached 1; the offending record is attached."""

    def __init__(self, record: LogEnriquesRecord):
        self.record = record
        bad = [format_rational(d) for d in record.delta if d >= 1]
        super().__init__(f"different coefficient(s) {', '.join(bad)} >= 1: boundary is not klt")


def different_coefficients(
    c: Fraction, pair_gcds: Sequence[int], multiplicities: Sequence[int]
) -> tuple[Fraction, Fraction, Fraction]:
    """``delta_i = 1 - 1/m_i + c k_i / m_i`` for a line contained with multiplicity ``k_i``."""
    return tuple(1 - Fraction(1, m) + c * k / m for m, k in zip(pair_gcds, multiplicities))  # type: ignore[return-value]


def balance(c: Fraction, residual_degree: int, delta: Sequence[Fraction], well_formed: Weight) -> Fraction:
    # deg L_i = w'_i and deg K_S = -sum(w'); the degree is taken up to the common factor 1/(w'_1 w'_2 w'_3)
    return c * residual_degree + sum(d * w for d, w in zip(delta, well_formed)) - well_formed.total()


def build_record(f: Polynomial, w: Weight | Sequence[int], *, strict: bool = True) -> LogEnriquesRecord:
    """Assemble the boundary data for the w-blowup of ``f = 0``.

    With ``strict`` a coefficient ``delta_i >= 1`` raises :class:`NonKltBoundary`.
    """
    w = as_weight(w)
    if len(w) != 3:
        raise ValueError("boundary data is defined for surfaces in 3-space")
    report = lct_candidate(f, w)
    c = report.candidate
    plane = well_form(w)
    core, k = divide_out_coordinate_factors(weighted_part(f, w))
    if any(ki > 1 for ki in k):
        log.warning("coordinate line contained with multiplicity %s in %s; using c*k/m", k, f)
    delta = different_coefficients(c, plane.pair_gcds, k)
    ell, degree = rewrite_form(core, plane)
    record = LogEnriquesRecord(
        plane=plane,
        c=c,
        delta=delta,
        contains_line=tuple(ki > 0 for ki in k),  # type: ignore[arg-type]
        residual_curve=ell,
        residual_degree=degree,
    )
    if strict and not record.klt_coefficients:
        raise NonKltBoundary(record)
    return record


def balance_check(record: LogEnriquesRecord) -> Fraction:
    """Degree of ``K_S + Diff`` on the well-formed plane; zero means numerically trivial."""
    return record.balance_defect
