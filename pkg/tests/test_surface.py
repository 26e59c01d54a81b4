import random
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccs_tqft.errors import (
    BoundaryMismatch,
    InvalidComplex,
    NotInternal,
    NotMergeable,
    NotSeparating,
    SamePosition,
    UnknownFixture,
)
from ccs_tqft.surface import (
    CATALOGUE,
    Edge,
    EdgeKind,
    EdgeRef,
    Face,
    SurfaceComplex,
    apply_move,
    candidate_moves,
    canonical_form,
    catalogue_surface,
    flip_edge,
    glue,
    isomorphic,
    move_i_merge,
    move_i_split,
    move_ii_merge,
    move_ii_split,
    random_move_sequence,
    validate,
    with_basepoint,
)

# name: (v, e, m, n, chi)
EXPECTED = {
    "sphere": (2, 1, 0, 0, 2),
    "disk_in": (1, 1, 0, 1, 1),
    "disk_out": (1, 1, 1, 0, 1),
    "cylinder": (0, 1, 1, 1, 0),
    "torus": (1, 2, 0, 0, 0),
}


@pytest.mark.parametrize("name", sorted(CATALOGUE))
def test_catalogue_counts(name):
    rep = validate(catalogue_surface(name))
    assert (rep.v, rep.e, rep.m, rep.n, rep.chi) == EXPECTED[name]
    assert rep.chi == CATALOGUE[name][1]


def test_genus_and_components():
    assert validate(catalogue_surface("torus")).genus == 1
    assert validate(catalogue_surface("sphere")).genus == 0
    assert validate(catalogue_surface("cylinder")).boundary_components == 2


def test_unknown_surface():
    with pytest.raises(UnknownFixture):
        catalogue_surface("klein")


def _broken(s, **changes):
    return replace(s, **changes)


def test_validation_errors():
    cyl = catalogue_surface("cylinder")
    # boundary 1-cell that is not a loop
    bad = _broken(cyl, edges=(Edge("g1", EdgeKind.IN, "b_in", "b_out", 0),) + cyl.edges[1:])
    with pytest.raises(InvalidComplex):
        validate(bad)
    # word that does not close up head to tail
    sph = catalogue_surface("sphere")
    bad = _broken(sph, faces=(Face("A", (EdgeRef("a", 1), EdgeRef("a", 1))),))
    with pytest.raises(InvalidComplex):
        validate(bad)
    # cut edge used only once
    torus = catalogue_surface("torus")
    w = torus.faces[0].word
    bad = _broken(torus, faces=(Face("A", w[:2] + (w[0].inverse(), w[0])),))
    with pytest.raises(InvalidComplex):
        validate(bad)
    # in-edge read backwards
    dk = catalogue_surface("disk_in")
    bad = _broken(dk, faces=(Face("A", (EdgeRef("g", -1), EdgeRef("k", 1), EdgeRef("k", -1))),))
    with pytest.raises(InvalidComplex):
        validate(bad)
    # isolated vertex
    bad = _broken(sph, vertices=sph.vertices + ("lonely",))
    with pytest.raises(InvalidComplex):
        validate(bad)
    # basepoint off the word
    bad = _broken(sph, faces=(replace(sph.faces[0], basepoint=5),))
    with pytest.raises(InvalidComplex):
        validate(bad)


def test_pinched_vertex_rejected():
    # two spheres sharing a vertex: every edge used twice but the link is disconnected
    s = SurfaceComplex(
        vertices=("p", "x", "y"),
        edges=(Edge("a", EdgeKind.CUT, "p", "x"), Edge("b", EdgeKind.CUT, "p", "y")),
        faces=(Face("A", (EdgeRef("a", 1), EdgeRef("a", -1))),
               Face("B", (EdgeRef("b", 1), EdgeRef("b", -1)))),
        n_in=0, n_out=0)
    with pytest.raises(InvalidComplex):
        validate(s)


def test_move_i_roundtrip():
    t = catalogue_surface("torus")
    s = move_i_split(t, "j1")
    rep = validate(s)
    assert (rep.v, rep.e) == (2, 3)
    w = [v for v in s.vertices if v not in t.vertices][0]
    back = move_i_merge(s, w)
    validate(back)
    assert isomorphic(back, t)


def test_move_ii_roundtrip():
    c = catalogue_surface("cylinder")
    s = move_ii_split(c, "A", 0, 2)
    rep = validate(s)
    assert len(s.faces) == 2 and rep.e == 2
    d = [e.id for e in s.edges if e.kind is EdgeKind.INTERNAL][0]
    back = move_ii_merge(s, d)
    validate(back)
    assert isomorphic(back, c)


def test_move_errors():
    c = catalogue_surface("cylinder")
    with pytest.raises(NotInternal):
        move_i_split(c, "g1")
    with pytest.raises(NotInternal):
        move_i_merge(c, "b_in")
    with pytest.raises(NotInternal):
        move_ii_merge(c, "k")
    with pytest.raises(SamePosition):
        move_ii_split(c, "A", 1, 1)
    with pytest.raises(NotMergeable):
        move_i_merge(catalogue_surface("torus"), "v")
    # internal edge with the same face on both sides
    one_face = SurfaceComplex(
        vertices=("v",),
        edges=(Edge("x", EdgeKind.INTERNAL, "v", "v"),),
        faces=(Face("A", (EdgeRef("x", 1), EdgeRef("x", -1))),), n_in=0, n_out=0)
    with pytest.raises(NotSeparating):
        move_ii_merge(one_face, "x")


def test_flip_and_basepoint_keep_validity():
    t = catalogue_surface("torus")
    f = flip_edge(t, "j1")
    validate(f)
    assert f.edge("j1").tail == "v"
    assert f.faces[0].word[0] == EdgeRef("j1", -1)
    b = with_basepoint(t, "A", 2)
    assert b.faces[0].read()[0] == EdgeRef("j1", -1)
    with pytest.raises(IndexError):
        with_basepoint(t, "A", 4)


@pytest.mark.parametrize("m1,m2", [("cylinder", "cylinder"), ("cylinder", "disk_in"),
                                   ("disk_out", "cylinder"), ("disk_out", "disk_in")])
def test_glue_counts(m1, m2):
    a, b = catalogue_surface(m1), catalogue_surface(m2)
    g = glue(a, b)
    rep = validate(g)
    assert rep.chi == a.euler_characteristic + b.euler_characteristic
    assert rep.v == a.v + b.v + 1
    assert rep.e == a.e + b.e + 1
    assert (g.n_in, g.n_out) == (a.n_in, b.n_out)


def test_glue_cylinders_shape():
    g = glue(catalogue_surface("cylinder"), catalogue_surface("cylinder"))
    rep = validate(g)
    assert (rep.v, rep.e) == (1, 3)
    assert g.edge("s0").kind is EdgeKind.INTERNAL


def test_glue_mismatch():
    with pytest.raises(BoundaryMismatch):
        glue(catalogue_surface("disk_in"), catalogue_surface("cylinder"))
    with pytest.raises(BoundaryMismatch):
        glue(catalogue_surface("sphere"), catalogue_surface("sphere"))


def test_canonical_form_ignores_labels():
    t = catalogue_surface("torus")
    rename = {"j1": "p", "j2": "q"}
    t2 = SurfaceComplex(
        vertices=("w",),
        edges=tuple(Edge(rename[e.id], e.kind, "w", "w") for e in reversed(t.edges)),
        faces=(Face("Z", tuple(EdgeRef(rename[r.edge], r.sign) for r in t.faces[0].word)),),
        n_in=0, n_out=0)
    assert canonical_form(t) == canonical_form(t2)
    assert not isomorphic(t, flip_edge(catalogue_surface("sphere"), "a"))


@pytest.mark.parametrize("name", sorted(CATALOGUE))
def test_all_candidate_moves_valid(name):
    s = catalogue_surface(name)
    for mv in candidate_moves(s):
        validate(apply_move(s, mv))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(CATALOGUE)), st.integers(0, 10 ** 6), st.integers(1, 6))
def test_random_sequences_stay_valid(name, seed, depth):
    s = catalogue_surface(name)
    trail = random_move_sequence(s, random.Random(seed), depth)
    assert len(trail) == depth
    for _, t in trail:
        rep = validate(t)
        assert rep.chi == CATALOGUE[name][1]
        assert (rep.m, rep.n) == (s.n_out, s.n_in)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(CATALOGUE)), st.integers(0, 10 ** 6))
def test_split_then_merge_is_identity(name, seed):
    rng = random.Random(seed)
    s = catalogue_surface(name)
    s = random_move_sequence(s, rng, 2)[-1][1]
    e = rng.choice(s.free_edges)
    t = move_i_split(s, e.id)
    w = t.vertices[-1]
    assert isomorphic(move_i_merge(t, w), s)
    f = rng.choice(s.faces)
    a, b = rng.sample(range(len(f.word)), 2)
    t = move_ii_split(s, f.id, a, b)
    assert isomorphic(move_ii_merge(t, t.edges[-1].id), s)
