from fractions import Fraction
from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcthresh.corpus import load_shipped
from lcthresh.polynomial import parse, weighted_order
from lcthresh.threshold import (
    NormalizationRequired,
    VerdictKind,
    discrepancy,
    exceptionality_verdict,
    format_rational,
    lct_candidate,
    shokurov_form,
    standard_form,
    weight_search,
)
from lcthresh.weights import Weight


def brute_force_search(f, bound):
    """Plain loop over weights with Fraction comparisons."""
    best = None
    for w in product(range(1, bound + 1), repeat=f.arity):
        if gcd(*w) != 1:
            continue
        c = Fraction(sum(w), weighted_order(f, w))
        if best is None or c < best[1]:
            best = (w, c)
    return best


def test_candidate_examples():
    r = lct_candidate(parse("x^7+y^3+z^2"), (6, 14, 21))
    assert (r.order, r.candidate) == (42, Fraction(41, 42))
    assert r.discrepancy_intercept == 40 and r.discrepancy_slope == -42
    assert lct_candidate(parse("x^3+y^3+z^3+x^5"), (1, 1, 1)).candidate == 1


@pytest.mark.parametrize("n", range(2, 11))
def test_plane_curve_family(n):
    f = parse(f"x^{n}-y^2", "xy")
    assert lct_candidate(f, (2, n)).candidate == Fraction(1, 2) + Fraction(1, n)


def test_candidate_errors():
    with pytest.raises(ValueError):
        lct_candidate(parse("1+x"), (1, 1, 1))
    with pytest.raises(ValueError):
        lct_candidate(parse("0"), (1, 1, 1))
    with pytest.raises(ValueError):
        lct_candidate(parse("x"), (1, 1))


def test_discrepancy_examples():
    r = lct_candidate(parse("x^6+y^3+z^2"), (1, 2, 3))
    assert r.order == 6
    assert discrepancy(r, Fraction(11, 12)) == Fraction(-1, 2)
    assert discrepancy(r, r.candidate) == -1
    assert discrepancy(r, 0) == 5


def test_weight_search_examples():
    assert weight_search(parse("x^7+y^3+z^2"), 21) == (Weight((6, 14, 21)), Fraction(41, 42))
    w, c = weight_search(parse("x^3z+y^4+z^3"), 12)
    assert (w.entries, c) == ((8, 9, 12), Fraction(29, 36))
    assert weight_search(parse("x"), 1) == (Weight((1, 1, 1)), Fraction(3))
    with pytest.raises(ValueError):
        weight_search(parse("x"), 0)


@pytest.mark.parametrize("text, bound", [("x^3z+y^4+z^3", 12), ("yz^2+x^4+x^3y+y^5", 8), ("z^2+x^5+y^4", 10), ("x^5+y^2", 9)])
def test_weight_search_agrees_with_brute_force(text, bound):
    f = parse(text, "xy" if "z" not in text else "xyz")
    w, c = weight_search(f, bound)
    bw, bc = brute_force_search(f, bound)
    assert (w.entries, c) == (bw, bc)


def test_weight_search_tie_break_is_lexicographic():
    # every weight (a, a) is equivalent to (1, 1); (1,1) and e.g. (1,2) give 2/2 vs 3/3 ties for x*y
    w, c = weight_search(parse("xy", "xy"), 5)
    assert c == 1 and w.entries == (1, 1)
    w, c = weight_search(parse("x+y", "xy"), 4)
    assert w.entries == (1, 1) and c == 2


@pytest.mark.parametrize("c, m", [(Fraction(41, 42), 42), (Fraction(61, 66), None), (Fraction(1, 2), 2)])
def test_standard_form(c, m):
    assert standard_form(c) == m


def test_standard_form_domain():
    with pytest.raises(ValueError):
        standard_form(Fraction(1))
    with pytest.raises(ValueError):
        standard_form(Fraction(0))


@pytest.mark.parametrize("c, n", [(Fraction(5, 6), 3), (Fraction(41, 42), None), (Fraction(3, 4), 4), (Fraction(1), 2), (Fraction(1, 2), None)])
def test_shokurov_form(c, n):
    assert shokurov_form(c) == n


def test_verdict_examples():
    v = exceptionality_verdict(parse("z^3+y^4+x^2y^2+x^3z"))
    assert v.kind is VerdictKind.NON_EXCEPTIONAL and v.threshold == Fraction(5, 6)
    assert "2A_{1*o}A_{4*o}" in v.detail
    v = exceptionality_verdict(parse("x^4+y^4+z^3"))
    assert (v.kind, v.threshold) == (VerdictKind.EXCEPTIONAL, Fraction(5, 6))
    v = exceptionality_verdict(parse("x^3z+xy^3+z^3"))
    assert (v.kind, v.threshold) == (VerdictKind.EXCEPTIONAL, Fraction(22, 27))


def test_verdict_log_canonical():
    v = exceptionality_verdict(parse("x^3+y^3+z^3"), bound=6)
    assert v.kind is VerdictKind.LOG_CANONICAL and v.threshold == 1


def test_verdict_requires_normal_form():
    with pytest.raises(NormalizationRequired):
        exceptionality_verdict(parse("(x+z)^3+y^4+x^5"))


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"


@settings(max_examples=200)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6), st.fractions(min_value=Fraction(1, 7), max_value=9, max_denominator=7))
def test_candidate_is_scale_invariant(a, b, c, k):
    f = parse(f"x^{a}+y^{b}+z^{c}+xyz")
    w = (2, 3, 5)
    assert lct_candidate(f.scale(k), w) == lct_candidate(f, w)


def test_listed_weight_is_optimal_up_to_its_largest_entry():
    for row in load_shipped():
        for inst in row.instances():
            f = inst.polynomial()
            _w, best = weight_search(f, max(inst.weight))
            assert best == inst.c == lct_candidate(f, inst.weight).candidate, inst.row_id
