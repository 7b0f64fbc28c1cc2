"""Weighted dual graphs of resolutions: intersection lattices and cycles.

Every vertex is a smooth rational curve with self-intersection at most -2;
edges are transversal intersections (the graphs here are trees).
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .threshold import format_rational


class Mark(str, enum.Enum):
    CIRCLE = "circle"
    STAR = "star"
    BULLET = "bullet"
    C1 = "C1"
    C2 = "C2"


class NotNegativeDefinite(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: str
    self_int: int
    mark: Mark | None = None


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[Vertex, ...]
    edges: frozenset[frozenset[str]]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        if not ids:
            raise ValueError("graph has no vertices")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(ids)})
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"loops are not allowed: {sorted(e)}")
            for v in e:
                if v not in self._index:
                    raise ValueError(f"edge refers to unknown vertex {v!r}")
        circles = 0
        for v in self.vertices:
            if v.self_int > -2:
                raise ValueError(f"vertex {v.id}: self-intersection {v.self_int} > -2")
            if v.mark is Mark.CIRCLE:
                circles += 1
                if v.self_int != -3:
                    raise ValueError(f"circle vertex {v.id} must have self-intersection -3")
            elif v.mark is Mark.BULLET and v.self_int != -2:
                raise ValueError(f"bullet vertex {v.id} must have self-intersection -2")
            elif v.mark is Mark.STAR and v.self_int not in (-2, -3):
                raise ValueError(f"star vertex {v.id} must have self-intersection -2 or -3")
        if circles > 1:
            raise ValueError("at most one circle vertex is allowed")
        if not self._connected():
            raise ValueError("dual graph must be connected")

    @classmethod
    def build(cls, vertices: Sequence[tuple], edges: Sequence[tuple[str, str]]) -> DualGraph:
        """Convenience constructor from ``(id, self_int[, mark])`` tuples."""
        vs = []
        for item in vertices:
            vid, si, *rest = item
            mark = Mark(rest[0]) if rest and rest[0] is not None else None
            vs.append(Vertex(str(vid), int(si), mark))
        es = set()
        for a, b in edges:
            e = frozenset((str(a), str(b)))
            if e in es:
                raise ValueError(f"multi-edge between {a} and {b}")
            es.add(e)
        return cls(tuple(vs), frozenset(es))

    @classmethod
    def from_json(cls, data: Mapping) -> DualGraph:
        try:
            vertices = [(v["id"], v["selfInt"], v.get("mark")) for v in data["vertices"]]
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from None
        return cls.build(vertices, edges)

    @classmethod
    def load(cls, path: str | Path) -> DualGraph:
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))

    def to_json(self) -> dict:
        return {
            "vertices": [
                {"id": v.id, "selfInt": v.self_int, "mark": v.mark.value if v.mark else None} for v in self.vertices
            ],
            "edges": sorted(sorted(e) for e in self.edges),
        }

    @property
    def ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    def index(self, vid: str) -> int:
        return self._index[vid]

    def neighbors(self, vid: str) -> list[str]:
        return [w for e in self.edges if vid in e for w in e if w != vid]

    def marked(self, mark: Mark) -> list[Vertex]:
        return [v for v in self.vertices if v.mark is mark]

    def _connected(self) -> bool:
        seen = {self.vertices[0].id}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class Cycle:
    coefficients: Mapping[str, int]

    def dot(self, graph: DualGraph, other: Cycle | None = None) -> int:
        other = other or self
        m = intersection_matrix(graph, check=False)
        ids = graph.ids
        return sum(
            self.coefficients.get(a, 0) * m[i][j] * other.coefficients.get(b, 0)
            for i, a in enumerate(ids)
            for j, b in enumerate(ids)
        )

    def to_json(self) -> dict:
        return dict(self.coefficients)


@dataclass(frozen=True)
class DiscrepancySolution:
    r: Mapping[str, Fraction]

    @property
    def a(self) -> dict[str, Fraction]:
        return {k: -v for k, v in self.r.items()}

    def to_json(self) -> dict:
        return {"r": {k: format_rational(v) for k, v in self.r.items()}}


class KltVerdict(str, enum.Enum):
    KLT = "klt"
    LC_NOT_KLT = "lc_not_klt"
    NOT_LC = "not_lc"


def intersection_matrix(graph: DualGraph, check: bool = True) -> list[list[int]]:
    n = len(graph.vertices)
    m = [[0] * n for _ in range(n)]
    for i, v in enumerate(graph.vertices):
        m[i][i] = v.self_int
    for e in graph.edges:
        a, b = (graph.index(v) for v in e)
        m[a][b] = m[b][a] = 1
    if check and not is_negative_definite(m):
        raise NotNegativeDefinite("intersection matrix is not negative definite")
    return m


def leading_minors(m: Sequence[Sequence[int]]) -> list[Fraction]:
    """Leading principal minors by fraction-exact Gaussian elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    minors = []
    det = Fraction(1)
    for k in range(n):
        if a[k][k] == 0:
            # a vanishing pivot means this leading minor is zero; later minors
            # are not needed to refute definiteness
            minors.append(Fraction(0))
            return minors
        det *= a[k][k]
        minors.append(det)
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            if factor:
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    return minors


def is_negative_definite(m: Sequence[Sequence[int]]) -> bool:
    minors = leading_minors(m)
    if len(minors) < len(m):
        return False
    return all((d < 0) if k % 2 == 0 else (d > 0) for k, d in enumerate(minors))


def fundamental_cycle(graph: DualGraph, order: Sequence[str] | None = None) -> Cycle:
    """Laufer's computation sequence starting from the reduced cycle.

    ``order`` sets the priority among vertices with positive intersection
    (default: graph order); the result does not depend on it.
    """
    m = intersection_matrix(graph)
    ids = graph.ids
    priority = [graph.index(v) for v in (order or ids)]
    if sorted(priority) != list(range(len(ids))):
        raise ValueError("order must be a permutation of the vertex ids")
    z = [1] * len(ids)
    while True:
        for i in priority:
            if sum(m[i][j] * z[j] for j in range(len(z))) > 0:
                z[i] += 1
                break
        else:
            return Cycle({v: z[i] for i, v in enumerate(ids)})


def canonical_degrees(graph: DualGraph) -> dict[str, int]:
    """``K . A_i = -A_i^2 - 2`` for smooth rational curves."""
    return {v.id: -v.self_int - 2 for v in graph.vertices}


def elliptic_invariants(graph: DualGraph) -> tuple[int, Fraction]:
    """``d = -Z^2`` and the arithmetic genus of the fundamental cycle."""
    z = fundamental_cycle(graph)
    z2 = z.dot(graph)
    kz = sum(k * z.coefficients[v] for v, k in canonical_degrees(graph).items())
    return -z2, 1 + Fraction(z2 + kz, 2)


def solve_exact(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals; raises on singular systems."""
    n = len(a)
    rows = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular linear system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


def discrepancy_system(
    graph: DualGraph, c1_coeff: Fraction = Fraction(1, 2), c2_coeff: Fraction = Fraction(1, 4)
) -> DiscrepancySolution:
    """Solve ``A_i . (c1 A_1 + c2 A_2) = sum_j r_j A_i . A_j`` over the unmarked curves.

    ``A_1`` and ``A_2`` are the vertices marked C1 and C2 (C2 may be absent);
    every other vertex must be a (-2)-curve.
    """
    c1 = graph.marked(Mark.C1)
    c2 = graph.marked(Mark.C2)
    if len(c1) != 1:
        raise ValueError("exactly one vertex must be marked C1")
    if len(c2) > 1:
        raise ValueError("at most one vertex may be marked C2")
    boundary = {c1[0].id: Fraction(c1_coeff)}
    if c2:
        boundary[c2[0].id] = Fraction(c2_coeff)
    inner = [v for v in graph.vertices if v.id not in boundary]
    for v in inner:
        if v.self_int != -2:
            raise ValueError(f"vertex {v.id} is not a (-2)-curve")
    m = intersection_matrix(graph, check=False)
    idx = [graph.index(v.id) for v in inner]
    lhs = [[Fraction(m[i][j]) for j in idx] for i in idx]
    rhs = [sum((coef * m[i][graph.index(b)] for b, coef in boundary.items()), Fraction(0)) for i in idx]
    r = solve_exact(lhs, rhs)
    return DiscrepancySolution({v.id: rv for v, rv in zip(inner, r)})


def klt_verdict(solution: DiscrepancySolution) -> KltVerdict:
    """Compare the discrepancies ``a_j = -r_j`` against -1."""
    a = solution.a.values()
    if all(x > -1 for x in a):
        return KltVerdict.KLT
    if all(x >= -1 for x in a):
        return KltVerdict.LC_NOT_KLT
    return KltVerdict.NOT_LC
