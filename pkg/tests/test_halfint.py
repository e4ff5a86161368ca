from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frigerio_tv.errors import AdmissibilityError, DomainError
from frigerio_tv.halfint import (
    ColorRange,
    HalfInt,
    admissible_doubled,
    is_admissible_iik,
    is_admissible_triple,
    require_admissible,
)


def brute_admissible(i, j, k, r):
    # direct reading of the definition on Fractions
    s = i + j + k
    return i + j >= k and j + k >= i and k + i >= j and s.denominator == 1 and s <= r - 2


def test_halfint_parsing_and_str():
    assert HalfInt.of("3/2").doubled == 3
    assert HalfInt.of(1.5) == HalfInt(3)
    assert HalfInt.of(Fraction(2)) == HalfInt(4)
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(4)) == "2"
    assert HalfInt.of(1) + "1/2" == HalfInt(3)
    with pytest.raises(DomainError):
        HalfInt.of("1/3")
    with pytest.raises(DomainError):
        HalfInt(-1)


def test_color_range():
    cr = ColorRange(5)
    assert len(cr) == 4
    assert [str(c) for c in cr] == ["0", "1/2", "1", "3/2"]
    assert HalfInt(3) in cr and HalfInt(4) not in cr


def test_examples():
    h = HalfInt.of
    assert is_admissible_triple(h(1), h(1), h(1), 5)
    assert not is_admissible_triple(h("1/2"), h(0), h(0), 5)
    assert not is_admissible_triple(h(0), h(0), h(2), 7)
    with pytest.raises(DomainError):
        is_admissible_triple(h(3), h(0), h(0), 5)


def test_require_admissible():
    require_admissible(2, 2, 2, 5)
    with pytest.raises(AdmissibilityError):
        require_admissible(1, 0, 0, 5)


@pytest.mark.parametrize("r", range(3, 13))
def test_triple_matches_definition_exhaustive(r):
    colours = ColorRange(r).elements
    for i, j, k in product(colours, repeat=3):
        assert is_admissible_triple(i, j, k, r) == brute_admissible(
            i.as_fraction(), j.as_fraction(), k.as_fraction(), r
        )


@pytest.mark.parametrize("r", range(3, 13))
def test_iik_closed_form_exhaustive(r):
    colours = ColorRange(r).elements
    for i, k in product(colours, repeat=2):
        assert is_admissible_iik(i, k, r) == is_admissible_triple(i, i, k, r)


@given(st.integers(3, 60), st.data())
def test_admissibility_symmetric(r, data):
    d = st.integers(0, r - 2)
    i, j, k = data.draw(d), data.draw(d), data.draw(d)
    base = admissible_doubled(i, j, k, r)
    for p in ((j, i, k), (k, j, i), (i, k, j), (j, k, i), (k, i, j)):
        assert admissible_doubled(*p, r) == base


@pytest.mark.parametrize("r", range(3, 10))
def test_parity_of_glued_quadruple_exhaustive(r):
    # (i, j, k) and (k, l, m) admissible  =>  i + j + l + m integral
    top = r - 2
    for i, j, k in product(range(top + 1), repeat=3):
        if not admissible_doubled(i, j, k, r):
            continue
        for l, m in product(range(top + 1), repeat=2):
            if admissible_doubled(k, l, m, r):
                assert (i + j + l + m) % 4 in (0, 2)


@pytest.mark.parametrize("r", range(3, 10))
def test_parity_with_integral_third_colour_exhaustive(r):
    top = r - 2
    for k in range(0, top + 1, 2):
        for i, j in product(range(top + 1), repeat=2):
            sum_integral = (i + j + k) % 2 == 0
            pair_integral = (i + j) % 2 == 0
            same_kind = i % 2 == j % 2
            assert sum_integral == pair_integral == same_kind
