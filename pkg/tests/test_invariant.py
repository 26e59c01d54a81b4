import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccs_tqft.crossed import FIXTURES, fixture, identity_module, trivial_h_module
from ccs_tqft.errors import ArityMismatch, MissingColour, SizeLimit, UnknownKind
from ccs_tqft.groups import commuting_fraction, conjugacy_classes, make_cyclic, make_symmetric
from ccs_tqft.invariant import (
    Colouring,
    all_invariants,
    basepoint_shift_check,
    check_fake_flat,
    closed_form,
    closed_form_for,
    count_colourings,
    count_fast,
    count_oracle,
    enumerate_colourings,
    flat_count_h_trivial,
    invariant,
    normalization,
    orientation_flip_check,
    torus_triples,
)
from ccs_tqft.scalar import ExactScalar
from ccs_tqft.surface import CATALOGUE, catalogue_surface, random_move_sequence

NAMES = sorted(FIXTURES)

# frozen from an independent brute force over raw permutations / residues
SPHERE = {"X1": 1, "X2": Fraction(1, 6), "X3": 1, "X4": 4, "X5": Fraction(9, 2)}
TORUS = {"X1": 1, "X2": 3, "X3": 1, "X4": 1, "X5": 2}


@pytest.mark.parametrize("name", NAMES)
def test_sphere_and_torus_values(name):
    cm = fixture(name)
    assert invariant(catalogue_surface("sphere"), cm) == SPHERE[name]
    assert invariant(catalogue_surface("torus"), cm) == TORUS[name]


def test_disk_values():
    d = catalogue_surface("disk_in")
    assert invariant(d, fixture("X2"), (0,)) == ExactScalar(Fraction(1, 6), 1, 6)
    assert invariant(d, fixture("X2"), (1,)) == 0
    assert invariant(d, fixture("X4"), (0,)) == ExactScalar(1, 1, 2)
    assert invariant(d, fixture("X4"), (1,)) == ExactScalar(1, 1, 2)


def test_raw_counts():
    assert count_colourings(catalogue_surface("sphere"), fixture("X4")) == 4
    assert count_colourings(catalogue_surface("torus"), fixture("X3")) == 4
    assert count_colourings(catalogue_surface("torus"), fixture("X2")) == 18


@pytest.mark.parametrize("name", NAMES)
def test_disk_counts_sum_to_h(name):
    cm = fixture(name)
    for kind in ("disk_in", "disk_out"):
        s = catalogue_surface(kind)
        total = sum(count_colourings(s, cm, *((g,), ()) if kind == "disk_in" else ((), (g,)))
                    for g in cm.g.elements())
        # the boundary colour is fixed by the face colour, k is free
        assert total == cm.order_h * cm.order_g


def test_check_fake_flat():
    s, cm = catalogue_surface("cylinder"), fixture("X2")
    assert check_fake_flat(s, cm, Colouring({"k": 0}, {"A": 0}), (1,), (1,))
    assert not check_fake_flat(s, cm, Colouring({"k": 3}, {"A": 0}), (1,), (1,))
    assert check_fake_flat(s, cm, Colouring({"k": 2}, {"A": 0}), (1,), (5,))
    with pytest.raises(MissingColour):
        check_fake_flat(s, cm, Colouring({}, {"A": 0}), (1,), (1,))
    with pytest.raises(ArityMismatch):
        check_fake_flat(s, cm, Colouring({"k": 0}, {"A": 0}), (), (1,))


def test_enumerated_colourings_are_fake_flat():
    s, cm = catalogue_surface("torus"), fixture("X4")
    cols = list(enumerate_colourings(s, cm))
    assert len(cols) == count_oracle(s, cm)
    assert all(check_fake_flat(s, cm, c) for c in cols)


def test_size_limits():
    s = catalogue_surface("torus")
    with pytest.raises(SizeLimit):
        count_fast(s, fixture("X2"), max_states=10)
    with pytest.raises(SizeLimit):
        count_oracle(s, fixture("X4"), max_states=10)


def test_normalization_exponents():
    cm = fixture("X2")
    assert normalization(catalogue_surface("sphere"), cm) == Fraction(1, 36)
    assert normalization(catalogue_surface("cylinder"), cm) == Fraction(1, 6)
    assert normalization(catalogue_surface("disk_in"), cm) == ExactScalar(Fraction(1, 36), 1, 6)


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("surface", sorted(CATALOGUE))
def test_closed_forms(name, surface):
    cm = fixture(name)
    for (gi, go), z in all_invariants(catalogue_surface(surface), cm).items():
        assert closed_form_for(surface, cm, gi, go) == z


def test_closed_form_errors_and_torus_triples():
    with pytest.raises(UnknownKind):
        closed_form("klein", fixture("X1"))
    assert torus_triples(fixture("X2")) == 18
    assert closed_form("disk", fixture("X4"), 1) == ExactScalar(1, 1, 2)


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("surface", sorted(CATALOGUE))
def test_fast_equals_oracle(name, surface):
    s, cm = catalogue_surface(surface), fixture(name)
    assert all_invariants(s, cm, "fast") == all_invariants(s, cm, "oracle")
    for gi, go in list(all_invariants(s, cm))[:4]:
        count_colourings(s, cm, gi, go, mode="both")


@pytest.mark.parametrize("name", NAMES)
def test_orientation_and_basepoint(name):
    cm = fixture(name)
    for surface in CATALOGUE:
        s = catalogue_surface(surface)
        for e in s.free_edges:
            assert orientation_flip_check(s, cm, e.id)
        for f in s.faces:
            for p in range(len(f.word)):
                assert basepoint_shift_check(s, cm, f.id, p)


@pytest.mark.parametrize("g", [make_cyclic(3), make_symmetric(3)], ids=lambda g: g.name)
def test_h_trivial_reduction(g):
    cm = trivial_h_module(g)
    n_cc = len(conjugacy_classes(g))
    t = catalogue_surface("torus")
    assert invariant(t, cm) == Fraction(flat_count_h_trivial(t, cm), g.order) == n_cc
    assert n_cc == commuting_fraction(g) * g.order
    sph = catalogue_surface("sphere")
    assert invariant(sph, cm) == Fraction(flat_count_h_trivial(sph, cm), g.order ** 2)


def test_identity_module_sphere_is_one():
    # with boundary an isomorphism there is exactly one face colour per edge colouring
    cm = identity_module(make_symmetric(3))
    assert invariant(catalogue_surface("sphere"), cm) == 1
    assert invariant(catalogue_surface("torus"), cm) == 1


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(NAMES), st.sampled_from(sorted(CATALOGUE)), st.integers(0, 10 ** 6))
def test_invariance_under_random_moves(name, surface, seed):
    cm = fixture(name)
    s = catalogue_surface(surface)
    ref = all_invariants(s, cm)
    final = random_move_sequence(s, random.Random(seed), 4, max_edges=4)[-1][1]
    assert all_invariants(final, cm) == ref
