"""Weight vectors and well-formed weighted projective planes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

from .polynomial import Polynomial, is_weighted_homogeneous, weighted_degree


@dataclass(frozen=True)
class Weight:
    """A primitive vector of positive integers, 2 to 4 entries long."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not 2 <= len(entries) <= 4:
            raise ValueError(f"weight must have 2 to 4 entries, got {len(entries)}")
        if any(e < 1 for e in entries):
            raise ValueError(f"weight entries must be positive: {entries}")
        if reduce(gcd, entries) != 1:
            raise ValueError(f"weight {entries} is not primitive")

    @classmethod
    def primitive(cls, entries: Iterable[int]) -> Weight:
        """Divide positive entries by their gcd."""
        entries = tuple(int(e) for e in entries)
        if any(e < 1 for e in entries):
            raise ValueError(f"weight entries must be positive: {entries}")
        g = reduce(gcd, entries)
        return cls(tuple(e // g for e in entries))

    @classmethod
    def parse(cls, text: str) -> Weight:
        try:
            entries = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse weight {text!r}; expected e.g. '6,14,21'") from None
        return cls(entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def total(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


def as_weight(w: Weight | Sequence[int]) -> Weight:
    return w if isinstance(w, Weight) else Weight.primitive(w)


def pair_gcds(w: Weight | Sequence[int]) -> tuple[int, int, int]:
    """``m_i = gcd(w_j, w_k)`` for ``{i, j, k} = {1, 2, 3}``."""
    w = w if isinstance(w, Weight) else Weight(tuple(w))
    if len(w) != 3:
        raise ValueError("pair gcds are defined for weight triples")
    w1, w2, w3 = w
    return gcd(w2, w3), gcd(w1, w3), gcd(w1, w2)


@dataclass(frozen=True)
class WellFormedPlane:
    original: Weight
    pair_gcds: tuple[int, int, int]
    well_formed: Weight

    @property
    def degree_divisor(self) -> int:
        m1, m2, m3 = self.pair_gcds
        return m1 * m2 * m3

    def display(self) -> str:
        if self.well_formed.entries == (1, 1, 1):
            return "P^2"
        return "P(" + ",".join(map(str, self.well_formed)) + ")"


def well_form(w: Weight | Sequence[int]) -> WellFormedPlane:
    """Well-formed presentation ``w'_i = w_i / (m_j m_k)``, coordinate order kept."""
    w = w if isinstance(w, Weight) else Weight(tuple(w))
    m = pair_gcds(w)
    out = []
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        q, r = divmod(w[i], m[j] * m[k])
        assert r == 0, "pairwise gcds of a primitive triple always divide out"
        out.append(q)
    return WellFormedPlane(original=w, pair_gcds=m, well_formed=Weight(tuple(out)))


def rewrite_form(f: Polynomial, plane: WellFormedPlane) -> tuple[Polynomial, int]:
    """Move a w-homogeneous form onto the well-formed coordinates.

    Each exponent ``a_i`` becomes ``a_i / m_i``.  Returns the rewritten form and
    its degree for the well-formed weight.
    """
    if f.arity != 3:
        raise ValueError("rewrite_form expects a ternary form")
    if f.is_zero():
        raise ValueError("cannot rewrite the zero polynomial")
    if not is_weighted_homogeneous(f, plane.original):
        raise ValueError(f"{f} is not homogeneous for weight {plane.original}")
    m = plane.pair_gcds
    terms = {}
    for exps, c in f.items():
        new = []
        for a, mi in zip(exps, m):
            if a % mi:
                raise ValueError(f"exponent {a} not divisible by {mi} in {f}; input violates homogeneity precondition")
            new.append(a // mi)
        terms[tuple(new)] = c
    g = Polynomial(f.variables, terms)
    degrees = {weighted_degree(e, plane.well_formed) for e in g.support()}
    assert len(degrees) == 1
    return g, degrees.pop()
