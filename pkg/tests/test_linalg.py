from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ccs_tqft.linalg import rank_exact


def test_small_cases():
    assert rank_exact([]) == 0
    assert rank_exact([[0, 0], [0, 0]]) == 0
    assert rank_exact([[1, 2], [2, 4]]) == 1
    assert rank_exact([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1
    assert rank_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank_exact([[0, 1], [1, 0], [1, 1]]) == 2


entries = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def matrices(draw):
    r, c = draw(st.integers(1, 6)), draw(st.integers(1, 6))
    rows = [[draw(entries) for _ in range(c)] for _ in range(r)]
    # build in some dependence so low ranks show up
    if r > 1 and draw(st.booleans()):
        k = draw(entries)
        rows[-1] = [k * x + y for x, y in zip(rows[0], rows[1 % r])]
    return rows


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_sympy(rows):
    expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row]
                             for row in rows]).rank()
    assert rank_exact(rows) == expected
