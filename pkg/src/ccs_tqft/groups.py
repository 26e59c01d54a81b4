"""Finite groups as Cayley tables over dense indices 0..n-1.

Index 0 is always the identity. Tables are validated eagerly: a
``FiniteGroup`` that exists has passed the identity, inverse and
associativity checks, so downstream code never re-checks them.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import AxiomViolation, SizeLimit

MAX_GROUP_ORDER = 720


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[x, y]`` is the index of the product x*y. Build instances with
    :func:`build_group` or the ``make_*`` constructors.
    """

    __slots__ = ("order", "table", "inverse", "name", "_abelian")

    def __init__(self, table: np.ndarray, inverse: np.ndarray, name: str = ""):
        self.table = table
        self.inverse = inverse
        self.order = int(table.shape[0])
        self.name = name
        self._abelian: bool | None = None

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def prod(self, xs: Iterable[int]) -> int:
        acc = 0
        for x in xs:
            acc = int(self.table[acc, x])
        return acc

    def conj(self, x: int, y: int) -> int:
        """x y x^-1"""
        return int(self.table[self.table[x, y], self.inverse[x]])

    def elements(self) -> range:
        return range(self.order)

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool(np.array_equal(self.table, self.table.T))
        return self._abelian

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.order, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def build_group(order: int, table: Sequence[Sequence[int]], name: str = "",
                *, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Validate a Cayley table and return the group.

    Raises AxiomViolation('identity'|'inverse'|'associativity') with the
    offending indices.
    """
    if order < 1:
        raise ValueError("group order must be positive")
    if order > max_order:
        raise SizeLimit(f"group order {order} exceeds cap {max_order}")
    t = np.asarray(table, dtype=np.int64)
    if t.shape != (order, order):
        raise ValueError(f"table must be {order}x{order}, got shape {t.shape}")
    if t.min() < 0 or t.max() >= order:
        raise ValueError("table entries must be indices in [0, order)")

    idx = np.arange(order)
    bad = np.nonzero((t[0] != idx) | (t[:, 0] != idx))[0]
    if bad.size:
        raise AxiomViolation("identity", (int(bad[0]),))

    inverse = np.empty(order, dtype=np.int64)
    for x in range(order):
        ys = np.nonzero(t[x] == 0)[0]
        if ys.size != 1:
            raise AxiomViolation("inverse", (x,), f"{ys.size} right inverses")
        inverse[x] = ys[0]
    # two-sided: y is a right inverse of x, so x must be a right inverse of y
    one_sided = np.nonzero(inverse[inverse] != idx)[0]
    if one_sided.size:
        raise AxiomViolation("inverse", (int(one_sided[0]),), "inverse not two-sided")

    left = t[t]                      # left[x, y, z] = (x*y)*z
    right = t[idx[:, None, None], t[None, :, :]]  # x*(y*z)
    bad3 = np.argwhere(left != right)
    if bad3.size:
        raise AxiomViolation("associativity", tuple(int(v) for v in bad3[0]))

    return FiniteGroup(_frozen(t), _frozen(inverse), name)


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_GROUP_ORDER:
        raise SizeLimit(f"cyclic group of order {n} exceeds cap {MAX_GROUP_ORDER}")
    idx = np.arange(n)
    return build_group(n, (idx[:, None] + idx[None, :]) % n, name=f"Z{n}")


def symmetric_elements(n: int) -> list[tuple[int, ...]]:
    """Permutations of range(n) in lexicographic one-line order (identity first)."""
    return list(itertools.permutations(range(n)))


def make_symmetric(n: int) -> FiniteGroup:
    """Symmetric group S_n, elements in lexicographic one-line notation.

    The product is composition with the right factor applied first:
    (p*q)(i) = p(q(i)).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 5:
        raise SizeLimit("make_symmetric is limited to n <= 5")
    perms = symmetric_elements(n)
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return build_group(len(perms), table, name=f"S{n}")


def make_direct_product(g1: FiniteGroup, g2: FiniteGroup,
                        *, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """G1 x G2 with element (a, b) stored at index a*|G2| + b."""
    n = g1.order * g2.order
    if n > max_order:
        raise SizeLimit(f"direct product of order {n} exceeds cap {max_order}")
    a = np.arange(n) // g2.order
    b = np.arange(n) % g2.order
    table = g1.table[a[:, None], a[None, :]] * g2.order + g2.table[b[:, None], b[None, :]]
    return build_group(n, table, name=f"{g1.name}x{g2.name}", max_order=max_order)


class GroupHom:
    """A validated homomorphism ``source -> target`` given on indices."""

    __slots__ = ("source", "target", "image_of")

    def __init__(self, source: FiniteGroup, target: FiniteGroup, image_of: Sequence[int]):
        f = np.asarray(image_of, dtype=np.int64)
        if f.shape != (source.order,):
            raise ValueError("image_of must have one entry per source element")
        if f.min() < 0 or f.max() >= target.order:
            raise ValueError("image_of entries must be target indices")
        if f[0] != 0:
            raise AxiomViolation("homomorphism", (0,), "identity not mapped to identity")
        lhs = f[source.table]
        rhs = target.table[f[:, None], f[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            raise AxiomViolation("homomorphism", tuple(int(v) for v in bad[0]))
        self.source = source
        self.target = target
        self.image_of = _frozen(f)

    def __call__(self, x: int) -> int:
        return int(self.image_of[x])

    @classmethod
    def identity(cls, g: FiniteGroup) -> "GroupHom":
        return cls(g, g, np.arange(g.order))

    @classmethod
    def trivial(cls, source: FiniteGroup, target: FiniteGroup) -> "GroupHom":
        return cls(source, target, np.zeros(source.order, dtype=np.int64))


class GroupAction:
    """Left action of ``actor`` on ``space`` by automorphisms.

    ``act[g, h]`` is the index of g acting on h.
    """

    __slots__ = ("actor", "space", "act")

    def __init__(self, actor: FiniteGroup, space: FiniteGroup, act: Sequence[Sequence[int]]):
        a = np.asarray(act, dtype=np.int64)
        if a.shape != (actor.order, space.order):
            raise ValueError(f"action table must be {actor.order}x{space.order}")
        if a.min() < 0 or a.max() >= space.order:
            raise ValueError("action entries must be indices of the acted-on group")
        hs = np.arange(space.order)
        if not np.array_equal(a[0], hs):
            h = int(np.nonzero(a[0] != hs)[0][0])
            raise AxiomViolation("action", (0, h), "identity acts non-trivially")
        # act[g1*g2][h] == act[g1][act[g2][h]]
        lhs = a[actor.table]                          # [g1, g2, h]
        rhs = a[np.arange(actor.order)[:, None, None], a[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            raise AxiomViolation("action", tuple(int(v) for v in bad[0]))
        for g in range(actor.order):
            row = a[g]
            if len(set(row.tolist())) != space.order:
                raise AxiomViolation("automorphism", (g,), "not a bijection")
            bad2 = np.argwhere(row[space.table] != space.table[row[:, None], row[None, :]])
            if bad2.size:
                raise AxiomViolation("automorphism", (g,) + tuple(int(v) for v in bad2[0]))
        self.actor = actor
        self.space = space
        self.act = _frozen(a)

    def __call__(self, g: int, h: int) -> int:
        return int(self.act[g, h])

    @classmethod
    def trivial(cls, actor: FiniteGroup, space: FiniteGroup) -> "GroupAction":
        return cls(actor, space, np.tile(np.arange(space.order), (actor.order, 1)))

    @classmethod
    def conjugation(cls, g: FiniteGroup) -> "GroupAction":
        t, inv = g.table, g.inverse
        x = np.arange(g.order)
        return cls(g, g, t[t[x[:, None], x[None, :]], inv[:, None]])


class Subgroup:
    """A subgroup stored as the sorted tuple of its member indices."""

    __slots__ = ("ambient", "members", "_mask")

    def __init__(self, ambient: FiniteGroup, members: Iterable[int]):
        ms = tuple(sorted({int(m) for m in members}))
        if not ms or ms[0] != 0:
            raise AxiomViolation("subgroup", (), "identity missing")
        mask = np.zeros(ambient.order, dtype=np.bool_)
        mask[list(ms)] = True
        for x in ms:
            if not mask[ambient.inverse[x]]:
                raise AxiomViolation("subgroup", (x,), "not closed under inverse")
            for y in ms:
                if not mask[ambient.table[x, y]]:
                    raise AxiomViolation("subgroup", (x, y), "not closed under product")
        mask.setflags(write=False)
        self.ambient = ambient
        self.members = ms
        self._mask = mask

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    def __contains__(self, x: int) -> bool:
        return bool(self._mask[x])

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def is_normal(self) -> bool:
        g = self.ambient
        return all(g.conj(x, k) in self for k in self.members for x in g.elements())

    def __repr__(self) -> str:
        return f"Subgroup({list(self.members)} of {self.ambient.name or '?'})"


def kernel(f: GroupHom) -> Subgroup:
    return Subgroup(f.source, np.nonzero(f.image_of == 0)[0])


def image(f: GroupHom) -> Subgroup:
    sub = Subgroup(f.target, np.unique(f.image_of))
    # |H| = |A| |K|
    assert len(sub) * int(np.count_nonzero(f.image_of == 0)) == f.source.order
    return sub


def conjugacy_classes(g: FiniteGroup) -> list[list[int]]:
    """Orbits of g under conjugation, each sorted, ordered by least member."""
    seen = np.zeros(g.order, dtype=np.bool_)
    classes = []
    for x in g.elements():
        if seen[x]:
            continue
        orbit = sorted({g.conj(y, x) for y in g.elements()})
        seen[orbit] = True
        classes.append(orbit)
    return classes


def commuting_fraction(g: FiniteGroup) -> Fraction:
    pairs = int(np.count_nonzero(g.table == g.table.T))
    return Fraction(pairs, g.order ** 2)


def centralizer_order(g: FiniteGroup, x: int) -> int:
    return int(np.count_nonzero(g.table[x, :] == g.table[:, x]))
