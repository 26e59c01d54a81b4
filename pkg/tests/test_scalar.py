from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ccs_tqft.errors import ParityMismatch
from ccs_tqft.scalar import ExactScalar

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
bases = st.sampled_from([2, 3, 6])


@st.composite
def scalars(draw, base=None):
    return ExactScalar(draw(fractions), draw(st.integers(0, 1)), base or draw(bases))


def test_canonical_forms():
    assert ExactScalar(3, 1, 4) == ExactScalar(6)
    assert ExactScalar(3, 1, 4).half_power == 0
    assert ExactScalar(0, 1, 6).half_power == 0
    assert ExactScalar(1, 2, 6) == ExactScalar(6)
    assert ExactScalar(1, 3, 6) == ExactScalar(6, 1, 6)
    assert ExactScalar(5) == 5 and ExactScalar(Fraction(1, 2)) == Fraction(1, 2)


def test_sqrt_power():
    assert ExactScalar.sqrt_power(6, 0) == 1
    assert ExactScalar.sqrt_power(6, 2) == 6
    assert ExactScalar.sqrt_power(6, -2) == Fraction(1, 6)
    assert ExactScalar.sqrt_power(6, -1) == ExactScalar(Fraction(1, 6), 1, 6)
    assert ExactScalar.sqrt_power(6, -3) == ExactScalar(Fraction(1, 36), 1, 6)
    assert ExactScalar.sqrt_power(4, -1) == Fraction(1, 2)
    r = ExactScalar.sqrt_power(2, 1)
    assert r * r == 2


def test_parity_mismatch():
    with pytest.raises(ParityMismatch):
        ExactScalar(1) + ExactScalar(1, 1, 2)
    with pytest.raises(ParityMismatch):
        ExactScalar(1, 1, 2) + ExactScalar(1, 1, 3)
    # zero is neutral regardless of parity
    assert ExactScalar(0) + ExactScalar(1, 1, 2) == ExactScalar(1, 1, 2)


def test_render_and_json():
    assert ExactScalar(3).render() == "3"
    assert ExactScalar(Fraction(9, 2)).render() == "9/2"
    assert ExactScalar(Fraction(1, 6), 1, 6).render() == "1/6·√6"
    z = ExactScalar(Fraction(-2, 3), 1, 2)
    assert z.to_json() == {"coeff": "-2/3", "half_power": 1, "base": 2}
    assert ExactScalar.from_json(z.to_json()) == z
    assert float(ExactScalar(1, 1, 4)) == 2.0


@given(scalars(), scalars(), scalars())
def test_mul_associative_commutative(a, b, c):
    try:
        left = (a * b) * c
        right = a * (b * c)
    except ParityMismatch:
        return
    assert left == right
    assert a * b == b * a


@given(scalars(base=6), scalars(base=6))
def test_add_same_parity(a, b):
    b = ExactScalar(b.coeff, a.half_power, 6)
    s = a + b
    assert s - b == a
    assert float(s) == pytest.approx(float(a) + float(b))


@given(scalars())
def test_hash_matches_eq(a):
    b = ExactScalar(a.coeff * 1, a.half_power, a.base)
    assert a == b and hash(a) == hash(b)
    assert a + 0 == a and a * 1 == a and a * 0 == 0
