from fractions import Fraction

import pytest

from lcthresh.k3cover import NonStandardThreshold, k3_cover
from lcthresh.polynomial import parse, weighted_order


def test_cusp_cover():
    rec = k3_cover(parse("x^7+y^3+z^2"), (6, 14, 21), yonemura=14)
    assert rec.m == 42 and rec.degree == 42
    assert rec.weight4.entries == (6, 14, 21, 1)
    assert rec.cover_poly == parse("x^7+y^3+z^2+t^42", "xyzt")
    assert rec.normalized_sum == 1
    assert rec.to_json()["yonemura"] == 14


def test_table_two_cover():
    rec = k3_cover(parse("z^2+x^5+y^4"), (4, 5, 10))
    assert rec.m == 20 and rec.weight4.entries == (4, 5, 10, 1)
    assert weighted_order(rec.cover_poly, rec.weight4) == 20


def test_cover_with_larger_t_weight():
    # c = 1/2 on the sextic cone, so t has weight 6 - 3 = 3
    rec = k3_cover(parse("x^6+y^6+z^6"), (1, 1, 1))
    assert rec.m == 2 and rec.weight4.entries == (1, 1, 1, 3)
    assert rec.normalized_sum == 1


def test_non_standard_threshold():
    with pytest.raises(NonStandardThreshold):
        k3_cover(parse("z^2+x^7+y^4"), (4, 7, 14))
    with pytest.raises(NonStandardThreshold):
        k3_cover(parse("x^2+y^2+z^2"), (1, 1, 1))


def test_cover_letter_is_fresh():
    rec = k3_cover(parse("t^7+y^3+z^2", "tyz"), (6, 14, 21))
    assert rec.cover_poly.variables == "tyzw"
    assert rec.cover_poly.coefficient((0, 0, 0, 42)) == Fraction(1)
