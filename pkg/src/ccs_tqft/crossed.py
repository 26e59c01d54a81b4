"""Crossed modules (finite 2-groups) and the built-in fixture catalogue."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import AxiomViolation, KernelNotCentral, NotSurjective, UnknownFixture
from .groups import (
    FiniteGroup,
    GroupAction,
    GroupHom,
    Subgroup,
    image,
    kernel,
    make_cyclic,
    make_symmetric,
)


class CrossedModule:
    """(G, H, boundary: H -> G, action of G on H), both axioms verified.

    ``kernel_k`` and ``image_a`` cache the kernel and image of the boundary
    map; most counting formulas only need their sizes.
    """

    __slots__ = ("g", "h", "boundary", "action", "kernel_k", "image_a", "name")

    def __init__(self, g: FiniteGroup, h: FiniteGroup, boundary: GroupHom,
                 action: GroupAction, kernel_k: Subgroup, image_a: Subgroup, name: str):
        self.g = g
        self.h = h
        self.boundary = boundary
        self.action = action
        self.kernel_k = kernel_k
        self.image_a = image_a
        self.name = name

    def d(self, h: int) -> int:
        return int(self.boundary.image_of[h])

    def act(self, g: int, h: int) -> int:
        return int(self.action.act[g, h])

    @property
    def order_g(self) -> int:
        return self.g.order

    @property
    def order_h(self) -> int:
        return self.h.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrossedModule):
            return NotImplemented
        return (self.g == other.g and self.h == other.h
                and np.array_equal(self.boundary.image_of, other.boundary.image_of)
                and np.array_equal(self.action.act, other.action.act))

    def __hash__(self) -> int:
        return hash((self.g, self.h, self.boundary.image_of.tobytes(), self.action.act.tobytes()))

    def __repr__(self) -> str:
        return f"CrossedModule({self.name or '?'}: |G|={self.g.order}, |H|={self.h.order})"


def _check_axioms(g: FiniteGroup, h: FiniteGroup, d: np.ndarray, act: np.ndarray) -> None:
    # d(g > h) == g d(h) g^-1
    lhs = d[act]
    rhs = g.table[g.table[np.arange(g.order)[:, None], d[None, :]], g.inverse[:, None]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        raise AxiomViolation("eq1", tuple(int(v) for v in bad[0]),
                             "boundary(g > h) != g boundary(h) g^-1")
    # d(h1) > h2 == h1 h2 h1^-1
    lhs2 = act[d]                                          # [h1, h2]
    rhs2 = h.table[h.table, h.inverse[:, None]]            # (h1 h2) h1^-1
    bad = np.argwhere(lhs2 != rhs2)
    if bad.size:
        raise AxiomViolation("eq2", tuple(int(v) for v in bad[0]),
                             "boundary(h1) > h2 != h1 h2 h1^-1")


def build_crossed_module(g: FiniteGroup, h: FiniteGroup, boundary: GroupHom,
                         action: GroupAction, name: str = "") -> CrossedModule:
    if boundary.source != h or boundary.target != g:
        raise ValueError("boundary must be a homomorphism H -> G")
    if action.actor != g or action.space != h:
        raise ValueError("action must be an action of G on H")
    _check_axioms(g, h, boundary.image_of, action.act)
    k = kernel(boundary)
    a = image(boundary)
    # implied by eq2; failing here means the checks above are wrong
    for x in k:
        for f in h.elements():
            if h.mul(x, f) != h.mul(f, x):
                raise KernelNotCentral(f"kernel element {x} does not commute with {f}")
    return CrossedModule(g, h, boundary, action, k, a, name)


def identity_module(g: FiniteGroup, name: str = "") -> CrossedModule:
    """H = G, boundary the identity, G acting by conjugation."""
    return build_crossed_module(g, g, GroupHom.identity(g), GroupAction.conjugation(g),
                                name or f"id({g.name})")


def trivial_h_module(g: FiniteGroup, name: str = "") -> CrossedModule:
    """H trivial: colourings reduce to flat G-colourings."""
    one = make_cyclic(1)
    return build_crossed_module(g, one, GroupHom.trivial(one, g), GroupAction.trivial(g, one),
                                name or f"triv_h({g.name})")


def from_central_extension(h: FiniteGroup, boundary: GroupHom, name: str = "") -> CrossedModule:
    """Crossed module of a central extension 1 -> K -> H -> G -> 1.

    G acts by lifted conjugation, g > x = f x f^-1 for any f with
    boundary(f) = g. Independence from the choice of lift is checked
    for every lift of every g.
    """
    g = boundary.target
    if boundary.source != h:
        raise ValueError("boundary must have source H")
    d = boundary.image_of
    if len(set(d.tolist())) != g.order:
        raise NotSurjective("boundary map does not hit every element of G")
    k = kernel(boundary)
    for x in k:
        for f in h.elements():
            if h.mul(x, f) != h.mul(f, x):
                raise KernelNotCentral(f"kernel element {x} does not commute with {f}")
    act = np.full((g.order, h.order), -1, dtype=np.int64)
    for f in h.elements():
        row = np.array([h.conj(f, x) for x in h.elements()], dtype=np.int64)
        gi = int(d[f])
        if act[gi, 0] < 0:
            act[gi] = row
        elif not np.array_equal(act[gi], row):
            raise KernelNotCentral(f"lifted action of g={gi} depends on the lift")
    return build_crossed_module(g, h, boundary, GroupAction(g, h, act),
                                name or f"ext({h.name}->{g.name})")


def _x1() -> CrossedModule:
    one = make_cyclic(1)
    return identity_module(one, "X1")


def _x2() -> CrossedModule:
    return trivial_h_module(make_symmetric(3), "X2")


def _x3() -> CrossedModule:
    return identity_module(make_cyclic(2), "X3")


def _x4() -> CrossedModule:
    z4, z2 = make_cyclic(4), make_cyclic(2)
    return from_central_extension(z4, GroupHom(z4, z2, [0, 1, 0, 1]), "X4")


def _x5() -> CrossedModule:
    z2, z3 = make_cyclic(2), make_cyclic(3)
    invert = [[0, 1, 2], [0, 2, 1]]
    return build_crossed_module(z2, z3, GroupHom.trivial(z3, z2), GroupAction(z2, z3, invert), "X5")


FIXTURES: dict[str, tuple[Callable[[], CrossedModule], str]] = {
    "X1": (_x1, "trivial crossed module (G = H = 1)"),
    "X2": (_x2, "H trivial over G = S3"),
    "X3": (_x3, "identity module on Z2 (H = G = Z2, conjugation)"),
    "X4": (_x4, "central extension Z4 -> Z2 (mod 2), K = {0, 2}"),
    "X5": (_x5, "Z2 acting on Z3 by inversion, trivial boundary"),
}

ALIASES = {
    "X1-trivial": "X1",
    "X2-S3": "X2",
    "X3-Z2": "X3",
    "X4-Z4Z2": "X4",
    "X5-Z2Z3": "X5",
}

_cache: dict[str, CrossedModule] = {}


def fixture(name: str) -> CrossedModule:
    """Return a catalogue module by name (``X1``..``X5`` or a listed alias)."""
    key = ALIASES.get(name, name)
    if key not in FIXTURES:
        raise UnknownFixture(f"unknown crossed-module fixture {name!r}; "
                             f"known: {sorted(FIXTURES) + sorted(ALIASES)}")
    if key not in _cache:
        _cache[key] = FIXTURES[key][0]()
    return _cache[key]


def all_fixtures() -> list[CrossedModule]:
    return [fixture(n) for n in FIXTURES]
