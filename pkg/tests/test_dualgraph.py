from fractions import Fraction
from itertools import product

import pytest
import sympy

from lcthresh.corpus import shipped_path
from lcthresh.dualgraph import (
    Cycle,
    DualGraph,
    KltVerdict,
    DiscrepancySolution,
    NotNegativeDefinite,
    canonical_degrees,
    discrepancy_system,
    elliptic_invariants,
    fundamental_cycle,
    intersection_matrix,
    is_negative_definite,
    klt_verdict,
    leading_minors,
    solve_exact,
)


def graph(name):
    return DualGraph.load(shipped_path(f"graphs/{name}.json"))


def chain(n, self_int=-2):
    return DualGraph.build([(f"A{i}", self_int) for i in range(1, n + 1)], [(f"A{i}", f"A{i+1}") for i in range(1, n)])


def test_intersection_matrix_of_chain():
    assert intersection_matrix(chain(3)) == [[-2, 1, 0], [1, -2, 1], [0, 1, -2]]


@pytest.mark.parametrize("name", ["eq1", "eq2", "a5_c1", "a4_c1_c2"])
def test_minors_match_sympy(name):
    m = intersection_matrix(graph(name))
    got = leading_minors(m)
    expected = [Fraction(int(sympy.Matrix(m)[:k, :k].det())) for k in range(1, len(m) + 1)]
    assert got == expected


def test_definiteness():
    assert is_negative_definite([[-2, 1], [1, -2]])
    assert not is_negative_definite([[-1, 1], [1, -1]])
    assert not is_negative_definite([[-2, 1, 0, 0], [1, -2, 1, 1], [0, 1, -2, 0], [0, 1, 0, -1]])


def test_validation():
    with pytest.raises(ValueError):
        DualGraph.build([("a", -1)], [])
    with pytest.raises(ValueError):
        DualGraph.build([("a", -2), ("b", -2)], [])
    with pytest.raises(ValueError):
        DualGraph.build([("a", -2), ("b", -2)], [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        DualGraph.build([("a", -2, "circle")], [])
    with pytest.raises(ValueError):
        DualGraph.from_json({"vertices": [{"id": "a"}], "edges": []})


def test_json_round_trip():
    g = graph("eq1")
    assert DualGraph.from_json(g.to_json()) == g


def test_fundamental_cycle_on_ade():
    z = fundamental_cycle(chain(4))
    assert set(z.coefficients.values()) == {1} and z.dot(chain(4)) == -2
    assert elliptic_invariants(chain(1)) == (2, 0)
    # D4: central curve gets 2
    d4 = DualGraph.build([("c", -2), ("a", -2), ("b", -2), ("d", -2)], [("c", "a"), ("c", "b"), ("c", "d")])
    assert fundamental_cycle(d4).coefficients == {"c": 2, "a": 1, "b": 1, "d": 1}


def test_fundamental_cycle_rejects_indefinite():
    bad = DualGraph.build([("c", -2), ("a", -2), ("b", -2), ("d", -2), ("e", -2)], [("c", "a"), ("c", "b"), ("c", "d"), ("c", "e")])
    with pytest.raises(NotNegativeDefinite):
        fundamental_cycle(bad)


@pytest.mark.parametrize("name", ["eq1", "eq2"])
def test_elliptic_graphs(name):
    g = graph(name)
    z = fundamental_cycle(g)
    assert z.coefficients["circle"] == 2
    assert z.dot(g) == -3
    assert elliptic_invariants(g) == (3, 1)
    rev = fundamental_cycle(g, order=list(reversed(g.ids)))
    assert rev == z


def test_canonical_degrees():
    assert canonical_degrees(graph("eq1"))["top_left"] == 1
    assert canonical_degrees(graph("eq1"))["b1"] == 0


def test_solve_exact_against_sympy():
    a = [[2, 1, -1], [-3, -1, 2], [-2, 1, 2]]
    b = [8, -11, -3]
    x = solve_exact(a, b)
    assert x == [Fraction(2), Fraction(3), Fraction(-1)]
    expected = sympy.Matrix(a).LUsolve(sympy.Matrix(b))
    assert x == [Fraction(int(v.p), int(v.q)) for v in expected]
    with pytest.raises(ArithmeticError):
        solve_exact([[1, 2], [2, 4]], [1, 2])


def test_discrepancy_single_curve():
    g = DualGraph.build([("A", -2), ("C", -3, "C1")], [("A", "C")])
    assert discrepancy_system(g).r == {"A": Fraction(-1, 4)}


def test_discrepancy_examples():
    r = discrepancy_system(graph("a5_c1")).r
    assert list(r.values()) == [Fraction(v, 4) for v in (-1, -2, -3, -2, -1)]
    r = discrepancy_system(graph("a4_c1_c2")).r
    assert list(r.values()) == [Fraction(v, 4) for v in (-1, -2, -3, -2)]


def test_discrepancy_requires_marks():
    with pytest.raises(ValueError):
        discrepancy_system(chain(3))


@pytest.mark.parametrize(
    "r, verdict",
    [
        ({"a": Fraction(-1, 2)}, KltVerdict.KLT),
        ({"a": Fraction(99, 100)}, KltVerdict.KLT),
        ({"a": Fraction(1)}, KltVerdict.LC_NOT_KLT),
        ({"a": Fraction(3, 2), "b": Fraction(0)}, KltVerdict.NOT_LC),
    ],
)
def test_klt_verdict_boundaries(r, verdict):
    assert klt_verdict(DiscrepancySolution(r)) is verdict


def brute_force_fundamental_cycle(g: DualGraph, top: int = 4) -> dict:
    """Smallest positive cycle with Z.A_i <= 0 for all i, by exhaustive search."""
    m = intersection_matrix(g)
    n = len(m)
    best = None
    for z in product(range(1, top + 1), repeat=n):
        if all(sum(m[i][j] * z[j] for j in range(n)) <= 0 for i in range(n)):
            if best is None or all(a <= b for a, b in zip(z, best)):
                best = z
    return dict(zip(g.ids, best))


@pytest.mark.parametrize("name", ["eq1", "eq2"])
def test_fundamental_cycle_is_minimal(name):
    g = graph(name)
    assert fundamental_cycle(g).coefficients == brute_force_fundamental_cycle(g, top=3)


def test_cycle_dot_is_symmetric():
    g = graph("eq2")
    z = fundamental_cycle(g)
    e = Cycle({"circle": 1})
    assert z.dot(g, e) == e.dot(g, z)
