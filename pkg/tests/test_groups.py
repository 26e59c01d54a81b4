import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccs_tqft.errors import AxiomViolation, SizeLimit
from ccs_tqft.groups import (
    GroupAction,
    GroupHom,
    build_group,
    centralizer_order,
    commuting_fraction,
    conjugacy_classes,
    image,
    kernel,
    make_cyclic,
    make_direct_product,
    make_symmetric,
    symmetric_elements,
)


def test_trivial_and_z2():
    one = build_group(1, [[0]])
    assert one.order == 1 and one.inv(0) == 0
    z2 = build_group(2, [[0, 1], [1, 0]])
    assert z2.inv(1) == 1


def test_missing_inverse_rejected():
    with pytest.raises(AxiomViolation) as exc:
        build_group(2, [[0, 1], [1, 1]])
    assert exc.value.axiom == "inverse"


def test_bad_identity_rejected():
    with pytest.raises(AxiomViolation) as exc:
        build_group(2, [[1, 0], [0, 1]])
    assert exc.value.axiom == "identity"


def test_non_associative_latin_square_rejected():
    # a loop of order 5 with identity 0 that is not a group
    t = [[0, 1, 2, 3, 4],
         [1, 0, 3, 4, 2],
         [2, 4, 0, 1, 3],
         [3, 2, 4, 0, 1],
         [4, 3, 1, 2, 0]]
    with pytest.raises(AxiomViolation) as exc:
        build_group(5, t)
    assert exc.value.axiom == "associativity"
    assert len(exc.value.witness) == 3


def test_size_limit():
    with pytest.raises(SizeLimit):
        make_symmetric(6)
    with pytest.raises(SizeLimit):
        make_direct_product(make_symmetric(5), make_symmetric(5))


def test_cyclic_one_is_trivial():
    assert make_cyclic(1).order == 1


def test_symmetric_order_is_lexicographic_composition():
    s3 = make_symmetric(3)
    perms = symmetric_elements(3)
    assert perms[0] == (0, 1, 2)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            assert perms[s3.mul(i, j)] == tuple(p[q[x]] for x in range(3))


def test_klein_four_self_inverse():
    v4 = make_direct_product(make_cyclic(2), make_cyclic(2))
    assert v4.order == 4
    assert all(v4.inv(x) == x for x in v4.elements())


@pytest.mark.parametrize("g", [make_cyclic(1), make_cyclic(4), make_cyclic(7), make_symmetric(3),
                               make_symmetric(4),
                               make_direct_product(make_cyclic(2), make_symmetric(3))],
                         ids=lambda g: g.name)
def test_axioms_exhaustive(g):
    n = g.order
    for x, y, z in itertools.product(range(n), repeat=3):
        assert g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))
    for x in range(n):
        assert g.mul(0, x) == x == g.mul(x, 0)
        assert g.mul(x, g.inv(x)) == 0 == g.mul(g.inv(x), x)


def _brute_classes(g):
    return sorted({tuple(sorted({g.mul(g.mul(y, x), g.inv(y)) for y in g.elements()}))
                   for x in g.elements()})


def test_conjugacy_classes():
    assert conjugacy_classes(make_cyclic(1)) == [[0]]
    assert len(conjugacy_classes(make_cyclic(4))) == 4
    s3 = conjugacy_classes(make_symmetric(3))
    assert sorted(len(c) for c in s3) == [1, 2, 3]
    assert s3 == [[0], [1, 2, 5], [3, 4]]
    s4 = make_symmetric(4)
    assert [tuple(c) for c in conjugacy_classes(s4)] == _brute_classes(s4)


def test_commuting_fraction():
    assert commuting_fraction(make_cyclic(5)) == 1
    s3 = make_symmetric(3)
    assert commuting_fraction(s3) == Fraction(18, 36)
    # number of classes = commuting fraction times the order
    assert commuting_fraction(s3) * 6 == 3 == len(conjugacy_classes(s3))


@pytest.mark.parametrize("g", [make_cyclic(6), make_symmetric(3), make_symmetric(4),
                               make_direct_product(make_cyclic(2), make_cyclic(2))],
                         ids=lambda g: g.name)
def test_class_count_equals_cf_times_order(g):
    assert commuting_fraction(g) * g.order == len(conjugacy_classes(g))
    assert sum(centralizer_order(g, x) for x in g.elements()) == int(commuting_fraction(g) * g.order ** 2)


def test_kernel_and_image():
    s3 = make_symmetric(3)
    ident = GroupHom.identity(s3)
    assert kernel(ident).members == (0,) and len(image(ident)) == 6
    z4, z2, z3 = make_cyclic(4), make_cyclic(2), make_cyclic(3)
    mod2 = GroupHom(z4, z2, [x % 2 for x in range(4)])
    assert kernel(mod2).members == (0, 2)
    assert image(mod2).members == (0, 1)
    triv = GroupHom.trivial(z3, z2)
    assert kernel(triv).members == (0, 1, 2) and image(triv).members == (0,)


def test_kernel_is_normal():
    s3 = make_symmetric(3)
    z2 = make_cyclic(2)
    sign = [0 if sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j]) % 2 == 0 else 1
            for p in symmetric_elements(3)]
    f = GroupHom(s3, z2, sign)
    k = kernel(f)
    assert k.members == (0, 3, 4)
    assert k.is_normal()


def test_bad_hom_rejected():
    z3, z2 = make_cyclic(3), make_cyclic(2)
    with pytest.raises(AxiomViolation):
        GroupHom(z3, z2, [0, 1, 1])


def test_bad_action_rejected():
    z2, z3 = make_cyclic(2), make_cyclic(3)
    with pytest.raises(AxiomViolation):
        GroupAction(z2, z3, [[0, 1, 2], [0, 1, 1]])
    with pytest.raises(AxiomViolation):
        GroupAction(z2, z3, [[0, 2, 1], [0, 1, 2]])


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12))
def test_direct_product_of_cyclics_is_abelian(a, b):
    g = make_direct_product(make_cyclic(a), make_cyclic(b))
    assert g.is_abelian
    assert commuting_fraction(g) == 1
    assert np.array_equal(g.table, g.table.T)
