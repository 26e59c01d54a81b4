"""Cut cellular surfaces as cyclic boundary words over oriented 1-cells.

A surface is a list of vertices, typed edges and faces. Each face carries
its boundary word read anticlockwise, and a basepoint that is an index
into that word (position p means the vertex where entry p starts).
Boundary circles are single loop edges at a boundary vertex; in-boundary
edges are read forward and out-boundary edges in reverse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    BoundaryMismatch,
    InvalidComplex,
    NotInternal,
    NotMergeable,
    NotSeparating,
    SamePosition,
)


class EdgeKind(Enum):
    IN = "in"
    OUT = "out"
    CUT = "cut"
    INTERNAL = "internal"


class EdgeRef(NamedTuple):
    edge: str
    sign: int  # +1 forward, -1 reverse

    def inverse(self) -> "EdgeRef":
        return EdgeRef(self.edge, -self.sign)


@dataclass(frozen=True)
class Edge:
    id: str
    kind: EdgeKind
    tail: str
    head: str
    slot: int | None = None

    @property
    def is_boundary(self) -> bool:
        return self.kind in (EdgeKind.IN, EdgeKind.OUT)


@dataclass(frozen=True)
class Face:
    id: str
    word: tuple[EdgeRef, ...]
    basepoint: int = 0

    def read(self) -> tuple[EdgeRef, ...]:
        """The word starting at the basepoint."""
        p = self.basepoint
        return self.word[p:] + self.word[:p]


@dataclass(frozen=True)
class SurfaceComplex:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...]
    n_in: int
    n_out: int
    name: str = field(default="", compare=False)

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def face_map(self) -> dict[str, Face]:
        return {f.id: f for f in self.faces}

    def edge(self, edge_id: str) -> Edge:
        return self.edge_map[edge_id]

    def start(self, ref: EdgeRef) -> str:
        e = self.edge_map[ref.edge]
        return e.tail if ref.sign > 0 else e.head

    def end(self, ref: EdgeRef) -> str:
        e = self.edge_map[ref.edge]
        return e.head if ref.sign > 0 else e.tail

    @cached_property
    def boundary_vertices(self) -> frozenset[str]:
        return frozenset(v for e in self.edges if e.is_boundary for v in (e.tail, e.head))

    @property
    def internal_vertices(self) -> list[str]:
        return [v for v in self.vertices if v not in self.boundary_vertices]

    @property
    def free_edges(self) -> list[Edge]:
        """Cut and internal edges, in list order."""
        return [e for e in self.edges if not e.is_boundary]

    def in_edges(self) -> list[Edge]:
        return sorted((e for e in self.edges if e.kind is EdgeKind.IN), key=lambda e: e.slot)

    def out_edges(self) -> list[Edge]:
        return sorted((e for e in self.edges if e.kind is EdgeKind.OUT), key=lambda e: e.slot)

    @property
    def v(self) -> int:
        return len(self.internal_vertices)

    @property
    def e(self) -> int:
        return len(self.free_edges)

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def occurrences(self, edge_id: str) -> list[tuple[int, int]]:
        """(face index, word position) of every occurrence of an edge."""
        return [(fi, p) for fi, f in enumerate(self.faces)
                for p, r in enumerate(f.word) if r.edge == edge_id]


@dataclass(frozen=True)
class ValidationReport:
    v: int
    e: int
    m: int
    n: int
    chi: int
    n_vertices: int
    n_edges: int
    n_faces: int

    @property
    def boundary_components(self) -> int:
        return self.m + self.n

    @property
    def genus(self) -> int:
        return (2 - self.chi - self.boundary_components) // 2


def _problems(s: SurfaceComplex) -> list[str]:
    out: list[str] = []
    ids = [e.id for e in s.edges]
    if len(set(ids)) != len(ids):
        out.append("duplicate edge ids")
    if len(set(s.vertices)) != len(s.vertices):
        out.append("duplicate vertex ids")
    if len({f.id for f in s.faces}) != len(s.faces):
        out.append("duplicate face ids")
    if not s.faces:
        out.append("no faces")
    vset = set(s.vertices)
    for e in s.edges:
        if e.tail not in vset or e.head not in vset:
            out.append(f"edge {e.id} has an unknown endpoint")
    if out:
        return out

    for kind, n in ((EdgeKind.IN, s.n_in), (EdgeKind.OUT, s.n_out)):
        slots = sorted(e.slot for e in s.edges if e.kind is kind)
        if slots != list(range(n)):
            out.append(f"{kind.value} slots {slots} do not match 0..{n - 1}")
    bverts = [e.tail for e in s.edges if e.is_boundary]
    for e in s.edges:
        if e.is_boundary and e.tail != e.head:
            out.append(f"boundary edge {e.id} is not a loop at a single 0-cell")
    if len(set(bverts)) != len(bverts):
        out.append("two boundary circles share a 0-cell")
    for e in s.edges:
        if not e.is_boundary and e.slot is not None:
            out.append(f"non-boundary edge {e.id} carries a slot")

    counts: dict[str, list[int]] = {e.id: [] for e in s.edges}
    seen_v: set[str] = set()
    for f in s.faces:
        if not f.word:
            out.append(f"face {f.id} has an empty word")
            continue
        if not 0 <= f.basepoint < len(f.word):
            out.append(f"face {f.id} basepoint {f.basepoint} outside its word")
        for r in f.word:
            if r.edge not in counts:
                out.append(f"face {f.id} references unknown edge {r.edge}")
                return out
            if r.sign not in (1, -1):
                out.append(f"face {f.id} has direction {r.sign} for edge {r.edge}")
                return out
            counts[r.edge].append(r.sign)
        for a, b in zip(f.word, f.word[1:] + f.word[:1]):
            if s.end(a) != s.start(b):
                out.append(f"face {f.id}: {a.edge} does not run head-to-tail into {b.edge}")
        seen_v.update(s.start(r) for r in f.word)
    for e in s.edges:
        signs = counts[e.id]
        if e.is_boundary:
            want = [1] if e.kind is EdgeKind.IN else [-1]
            if signs != want:
                out.append(f"boundary edge {e.id} must appear once "
                           f"{'forward' if want == [1] else 'reversed'}, got {signs}")
        elif sorted(signs) != [-1, 1]:
            out.append(f"edge {e.id} must appear once in each direction, got {signs}")
    for v in s.vertices:
        if v not in seen_v:
            out.append(f"vertex {v} lies on no face")
    if out:
        return out
    out.extend(_link_problems(s))
    return out


def _link_problems(s: SurfaceComplex) -> list[str]:
    """Check that the corners around every 0-cell form one cycle (or one chain at the boundary)."""
    where: dict[EdgeRef, tuple[int, int]] = {}
    for fi, f in enumerate(s.faces):
        for p, r in enumerate(f.word):
            where[r] = (fi, p)
    corners: dict[str, set[tuple[int, int]]] = {v: set() for v in s.vertices}
    for fi, f in enumerate(s.faces):
        for p, r in enumerate(f.word):
            corners[s.start(r)].add((fi, p))

    def step(c):
        fi, p = c
        r = s.faces[fi].word[p]
        if s.edge(r.edge).is_boundary:
            return None
        fj, q = where[r.inverse()]
        return fj, (q + 1) % len(s.faces[fj].word)

    out = []
    for v, cs in corners.items():
        if v in s.boundary_vertices:
            starts = [(fi, (p + 1) % len(s.faces[fi].word))
                      for fi, f in enumerate(s.faces) for p, r in enumerate(f.word)
                      if s.edge(r.edge).is_boundary and s.end(r) == v]
            c = starts[0]
            visited = []
            while c is not None and c not in visited:
                visited.append(c)
                c = step(c)
        else:
            c0 = next(iter(sorted(cs)))
            visited, c = [], c0
            while c is not None and c not in visited:
                visited.append(c)
                c = step(c)
            if c is None:
                out.append(f"link of internal 0-cell {v} is not closed")
        if set(visited) != cs:
            out.append(f"0-cell {v} is not a manifold point ({len(visited)} of {len(cs)} corners linked)")
    return out


def validate(s: SurfaceComplex) -> ValidationReport:
    """Check every structural invariant; raise InvalidComplex listing all violations."""
    problems = _problems(s)
    if problems:
        raise InvalidComplex("; ".join(problems))
    return ValidationReport(v=s.v, e=s.e, m=s.n_out, n=s.n_in, chi=s.euler_characteristic,
                            n_vertices=len(s.vertices), n_edges=len(s.edges),
                            n_faces=len(s.faces))


# --- catalogue -----------------------------------------------------------

F, R = 1, -1


def _w(*pairs) -> tuple[EdgeRef, ...]:
    return tuple(EdgeRef(e, sgn) for e, sgn in pairs)


def make_sphere() -> SurfaceComplex:
    return SurfaceComplex(
        vertices=("v0", "v1"),
        edges=(Edge("a", EdgeKind.CUT, "v0", "v1"),),
        faces=(Face("A", _w(("a", F), ("a", R))),),
        n_in=0, n_out=0, name="sphere")


def make_disk_in() -> SurfaceComplex:
    return SurfaceComplex(
        vertices=("b0", "v"),
        edges=(Edge("g", EdgeKind.IN, "b0", "b0", 0), Edge("k", EdgeKind.CUT, "b0", "v")),
        faces=(Face("A", _w(("g", F), ("k", F), ("k", R))),),
        n_in=1, n_out=0, name="disk_in")


def make_disk_out() -> SurfaceComplex:
    return SurfaceComplex(
        vertices=("v", "b0"),
        edges=(Edge("k", EdgeKind.CUT, "v", "b0"), Edge("g", EdgeKind.OUT, "b0", "b0", 0)),
        faces=(Face("A", _w(("k", F), ("g", R), ("k", R))),),
        n_in=0, n_out=1, name="disk_out")


def make_cylinder() -> SurfaceComplex:
    return SurfaceComplex(
        vertices=("b_in", "b_out"),
        edges=(Edge("g1", EdgeKind.IN, "b_in", "b_in", 0),
               Edge("k", EdgeKind.CUT, "b_in", "b_out"),
               Edge("g2", EdgeKind.OUT, "b_out", "b_out", 0)),
        faces=(Face("A", _w(("g1", F), ("k", F), ("g2", R), ("k", R))),),
        n_in=1, n_out=1, name="cylinder")


def make_torus() -> SurfaceComplex:
    return SurfaceComplex(
        vertices=("v",),
        edges=(Edge("j1", EdgeKind.CUT, "v", "v"), Edge("j2", EdgeKind.CUT, "v", "v")),
        faces=(Face("A", _w(("j1", F), ("j2", F), ("j1", R), ("j2", R))),),
        n_in=0, n_out=0, name="torus")


CATALOGUE = {
    "sphere": (make_sphere, 2),
    "disk_in": (make_disk_in, 1),
    "disk_out": (make_disk_out, 1),
    "cylinder": (make_cylinder, 0),
    "torus": (make_torus, 0),
}


def catalogue_surface(name: str) -> SurfaceComplex:
    from .errors import UnknownFixture
    if name not in CATALOGUE:
        raise UnknownFixture(f"unknown surface {name!r}; known: {sorted(CATALOGUE)}")
    return CATALOGUE[name][0]()


# --- moves ---------------------------------------------------------------

def _fresh(prefix: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    if prefix not in taken:
        return prefix
    i = 1
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


def _all_ids(s: SurfaceComplex) -> set[str]:
    return set(s.vertices) | {e.id for e in s.edges} | {f.id for f in s.faces}


def move_i_split(s: SurfaceComplex, edge_id: str) -> SurfaceComplex:
    """Insert a new 0-cell into a non-boundary 1-cell (both copies if cut)."""
    e = s.edge_map.get(edge_id)
    if e is None or e.is_boundary:
        raise NotInternal(f"{edge_id!r} is not a cut or internal 1-cell")
    taken = _all_ids(s)
    w = _fresh(f"{edge_id}_v", taken)
    x1 = _fresh(f"{edge_id}_0", taken | {w})
    x2 = _fresh(f"{edge_id}_1", taken | {w, x1})
    faces = []
    for f in s.faces:
        word: list[EdgeRef] = []
        bp = f.basepoint
        for p, r in enumerate(f.word):
            if r.edge != edge_id:
                word.append(r)
                continue
            if p < f.basepoint:
                bp += 1
            word.extend([EdgeRef(x1, 1), EdgeRef(x2, 1)] if r.sign > 0
                        else [EdgeRef(x2, -1), EdgeRef(x1, -1)])
        faces.append(replace(f, word=tuple(word), basepoint=bp))
    edges = []
    for ed in s.edges:
        if ed.id == edge_id:
            edges += [Edge(x1, e.kind, e.tail, w), Edge(x2, e.kind, w, e.head)]
        else:
            edges.append(ed)
    return SurfaceComplex(s.vertices + (w,), tuple(edges), tuple(faces), s.n_in, s.n_out, s.name)


def move_i_merge(s: SurfaceComplex, vertex_id: str) -> SurfaceComplex:
    """Remove a degree-2 internal 0-cell, fusing its two 1-cells."""
    if vertex_id not in s.vertices:
        raise NotInternal(f"unknown 0-cell {vertex_id!r}")
    if vertex_id in s.boundary_vertices:
        raise NotInternal(f"0-cell {vertex_id!r} lies on a boundary circle")
    ends = [(e, +1) for e in s.edges if e.head == vertex_id] + \
           [(e, -1) for e in s.edges if e.tail == vertex_id]
    if len(ends) != 2 or ends[0][0].id == ends[1][0].id:
        raise NotMergeable(f"0-cell {vertex_id!r} does not join two distinct 1-cells")
    (a, sa), (b, sb) = ends
    # orient so that a' ends at w and b' starts at w
    sb = -sb
    if a.kind is not b.kind:
        raise NotMergeable(f"1-cells {a.id} and {b.id} have different kinds")
    ap, bp_ = EdgeRef(a.id, sa), EdgeRef(b.id, sb)
    c = _fresh(f"{a.id}+{b.id}", _all_ids(s) - {a.id, b.id})
    tail, head = s.start(ap), s.end(bp_)

    faces = []
    pairs = 0
    for f in s.faces:
        L = len(f.word)
        drop: set[int] = set()
        repl: dict[int, EdgeRef] = {}
        for i, r in enumerate(f.word):
            j = (i + 1) % L
            if r == ap:
                if f.word[j] != bp_ or j == i:
                    raise NotMergeable(f"{a.id} is not followed by {b.id} in face {f.id}")
                repl[i], drop = EdgeRef(c, 1), drop | {j}
                pairs += 1
            elif r == bp_.inverse():
                if f.word[j] != ap.inverse() or j == i:
                    raise NotMergeable(f"{b.id}^-1 is not followed by {a.id}^-1 in face {f.id}")
                repl[i], drop = EdgeRef(c, -1), drop | {j}
                pairs += 1
        if not repl:
            faces.append(f)
            continue
        if drop & set(repl):
            raise NotMergeable(f"overlapping fusion in face {f.id}")
        keep = [i for i in range(L) if i not in drop]
        word = tuple(repl.get(i, f.word[i]) for i in keep)
        bp = f.basepoint
        if bp in drop:
            bp = (bp - 1) % L  # the vanished 0-cell: move to the start of the fused entry
        faces.append(replace(f, word=word, basepoint=keep.index(bp)))
    expected = sum(1 for ed in (a, b) for _ in range(2))  # two occurrences each
    if pairs * 2 != expected:
        raise NotMergeable(f"1-cells at {vertex_id!r} are not consistently paired")
    edges = []
    for ed in s.edges:
        if ed.id == a.id:
            edges.append(Edge(c, a.kind, tail, head))
        elif ed.id != b.id:
            edges.append(ed)
    verts = tuple(x for x in s.vertices if x != vertex_id)
    return SurfaceComplex(verts, tuple(edges), tuple(faces), s.n_in, s.n_out, s.name)


def move_ii_split(s: SurfaceComplex, face_id: str, pos_a: int, pos_b: int) -> SurfaceComplex:
    """Divide a 2-cell by a new internal 1-cell running from position pos_a to pos_b.

    The half containing the old basepoint keeps the face id, the list slot
    and the basepoint; the other half is appended with its basepoint at the
    start of the new edge.
    """
    fi = next((i for i, f in enumerate(s.faces) if f.id == face_id), None)
    if fi is None:
        raise KeyError(face_id)
    f = s.faces[fi]
    L = len(f.word)
    if not (0 <= pos_a < L and 0 <= pos_b < L):
        raise IndexError("word positions out of range")
    if pos_a == pos_b:
        raise SamePosition(f"positions {pos_a} and {pos_b} coincide")
    taken = _all_ids(s)
    d = _fresh(f"d_{face_id}", taken)
    f2 = _fresh(f"{face_id}'", taken | {d})
    rot = lambda a, n: tuple(f.word[(a + i) % L] for i in range(n))
    n1 = (pos_b - pos_a) % L
    arc1, arc2 = rot(pos_a, n1), rot(pos_b, L - n1)
    va, vb = s.start(f.word[pos_a]), s.start(f.word[pos_b])
    p = f.basepoint
    if (p - pos_a) % L < n1:
        first = Face(f.id, arc1 + (EdgeRef(d, -1),), (p - pos_a) % L)
        second = Face(f2, (EdgeRef(d, 1),) + arc2, 0)
    else:
        first = Face(f.id, arc2 + (EdgeRef(d, 1),), (p - pos_b) % L)
        second = Face(f2, (EdgeRef(d, -1),) + arc1, 0)
    faces = s.faces[:fi] + (first,) + s.faces[fi + 1:] + (second,)
    edges = s.edges + (Edge(d, EdgeKind.INTERNAL, va, vb),)
    return SurfaceComplex(s.vertices, edges, faces, s.n_in, s.n_out, s.name)


def move_ii_merge(s: SurfaceComplex, edge_id: str) -> SurfaceComplex:
    """Remove an internal 1-cell separating two distinct 2-cells.

    The merged face takes the place and basepoint of the earlier of the two.
    """
    e = s.edge_map.get(edge_id)
    if e is None or e.kind is not EdgeKind.INTERNAL:
        raise NotInternal(f"{edge_id!r} is not an internal 1-cell")
    occ = s.occurrences(edge_id)
    if len(occ) != 2 or occ[0][0] == occ[1][0]:
        raise NotSeparating(f"{edge_id!r} does not separate two distinct 2-cells")
    (f1i, i), (f2i, j) = sorted(occ)
    f1, f2 = s.faces[f1i], s.faces[f2i]
    L2 = len(f2.word)
    rest = tuple(f2.word[(j + t) % L2] for t in range(1, L2))
    word = f1.word[:i] + rest + f1.word[i + 1:]
    bp = f1.basepoint if f1.basepoint <= i else f1.basepoint + L2 - 2
    merged = replace(f1, word=word, basepoint=bp)
    faces = tuple(merged if k == f1i else fc for k, fc in enumerate(s.faces) if k != f2i)
    edges = tuple(x for x in s.edges if x.id != edge_id)
    return SurfaceComplex(s.vertices, edges, faces, s.n_in, s.n_out, s.name)


def flip_edge(s: SurfaceComplex, edge_id: str) -> SurfaceComplex:
    """Reverse the orientation of a cut or internal 1-cell."""
    e = s.edge_map.get(edge_id)
    if e is None or e.is_boundary:
        raise NotInternal(f"{edge_id!r} is not a cut or internal 1-cell")
    edges = tuple(replace(x, tail=x.head, head=x.tail) if x.id == edge_id else x for x in s.edges)
    faces = tuple(replace(f, word=tuple(r.inverse() if r.edge == edge_id else r for r in f.word))
                  for f in s.faces)
    return SurfaceComplex(s.vertices, edges, faces, s.n_in, s.n_out, s.name)


def with_basepoint(s: SurfaceComplex, face_id: str, pos: int) -> SurfaceComplex:
    faces = tuple(replace(f, basepoint=pos) if f.id == face_id else f for f in s.faces)
    f = s.face_map[face_id]
    if not 0 <= pos < len(f.word):
        raise IndexError("basepoint outside the face word")
    return SurfaceComplex(s.vertices, s.edges, faces, s.n_in, s.n_out, s.name)


# --- gluing --------------------------------------------------------------

def _prefixed(s: SurfaceComplex, tag: str) -> SurfaceComplex:
    pv = lambda x: f"{tag}{x}"
    edges = tuple(replace(e, id=pv(e.id), tail=pv(e.tail), head=pv(e.head)) for e in s.edges)
    faces = tuple(Face(pv(f.id), tuple(EdgeRef(pv(r.edge), r.sign) for r in f.word), f.basepoint)
                  for f in s.faces)
    return SurfaceComplex(tuple(map(pv, s.vertices)), edges, faces, s.n_in, s.n_out, s.name)


def glue(m1: SurfaceComplex, m2: SurfaceComplex) -> SurfaceComplex:
    """M2 o M1: out-slot k of m1 is identified with in-slot k of m2.

    The leftmost shared circle becomes an internal 1-cell, the others cut
    1-cells; each identified pair of boundary 0-cells becomes one internal
    0-cell.
    """
    m = m1.n_out
    if m == 0 or m != m2.n_in:
        raise BoundaryMismatch(f"cannot glue {m1.n_out} out-circles to {m2.n_in} in-circles")
    a, b = _prefixed(m1, "1."), _prefixed(m2, "2.")
    outs, ins = a.out_edges(), b.in_edges()
    ren_e: dict[str, str] = {}
    ren_v: dict[str, str] = {}
    new_edges = []
    for k, (o, i) in enumerate(zip(outs, ins)):
        eid, vid = f"s{k}", f"u{k}"
        ren_e[o.id] = ren_e[i.id] = eid
        ren_v[o.tail] = ren_v[i.tail] = vid
        kind = EdgeKind.INTERNAL if k == 0 else EdgeKind.CUT
        new_edges.append(Edge(eid, kind, vid, vid))
    rv = lambda x: ren_v.get(x, x)
    edges = [replace(e, tail=rv(e.tail), head=rv(e.head))
             for e in a.edges + b.edges if e.id not in ren_e]
    edges += new_edges
    faces = tuple(replace(f, word=tuple(EdgeRef(ren_e.get(r.edge, r.edge), r.sign) for r in f.word))
                  for f in a.faces + b.faces)
    verts = []
    for x in a.vertices + b.vertices:
        y = rv(x)
        if y not in verts:
            verts.append(y)
    name = f"{m2.name or '?'}o{m1.name or '?'}"
    return SurfaceComplex(tuple(verts), tuple(edges), faces, m1.n_in, m2.n_out, name)


# --- canonical form ------------------------------------------------------

def _encode_from(s: SurfaceComplex, root: int):
    where: dict[str, list[int]] = {}
    for fi, f in enumerate(s.faces):
        for r in f.word:
            where.setdefault(r.edge, []).append(fi)
    order, seen = [root], {root}
    k = 0
    while k < len(order) or len(order) < len(s.faces):
        if k == len(order):
            nxt = min(i for i in range(len(s.faces)) if i not in seen)
            order.append(nxt)
            seen.add(nxt)
        for r in s.faces[order[k]].read():
            for fj in where[r.edge]:
                if fj not in seen:
                    seen.add(fj)
                    order.append(fj)
        k += 1
    elab: dict[str, int] = {}
    vlab: dict[str, int] = {}
    faces = []
    for fi in order:
        enc = []
        for r in s.faces[fi].read():
            elab.setdefault(r.edge, len(elab))
            vlab.setdefault(s.start(r), len(vlab))
            enc.append((elab[r.edge], r.sign))
        faces.append(tuple(enc))
    edges = sorted((elab[e.id], e.kind.value, -1 if e.slot is None else e.slot,
                    vlab[e.tail], vlab[e.head]) for e in s.edges)
    return (s.n_in, s.n_out, len(s.vertices), tuple(faces), tuple(edges))


def canonical_form(s: SurfaceComplex):
    """A relabeling-invariant key: equal keys mean isomorphic complexes (basepoints included)."""
    return min(_encode_from(s, r) for r in range(len(s.faces)))


def isomorphic(s1: SurfaceComplex, s2: SurfaceComplex) -> bool:
    return canonical_form(s1) == canonical_form(s2)


# --- random move sequences ----------------------------------------------

def candidate_moves(s: SurfaceComplex) -> list[tuple]:
    """Every applicable move as (kind, *args)."""
    moves: list[tuple] = []
    for e in s.edges:
        if not e.is_boundary:
            moves.append(("I-split", e.id))
        if e.kind is EdgeKind.INTERNAL:
            occ = s.occurrences(e.id)
            if len(occ) == 2 and occ[0][0] != occ[1][0]:
                moves.append(("II-merge", e.id))
    for v in s.internal_vertices:
        try:
            move_i_merge(s, v)
        except NotMergeable:
            continue
        moves.append(("I-merge", v))
    for f in s.faces:
        L = len(f.word)
        for a in range(L):
            for b in range(L):
                if a != b:
                    moves.append(("II-split", f.id, a, b))
    return moves


def apply_move(s: SurfaceComplex, move: tuple) -> SurfaceComplex:
    kind, *args = move
    fn = {"I-split": move_i_split, "I-merge": move_i_merge,
          "II-split": move_ii_split, "II-merge": move_ii_merge}[kind]
    return fn(s, *args)


def random_move_sequence(s: SurfaceComplex, rng: random.Random, depth: int,
                         max_edges: int | None = None) -> list[tuple[tuple, SurfaceComplex]]:
    """Apply ``depth`` random moves; returns the (move, result) trail.

    Move kinds are drawn uniformly first so the many II-split position pairs
    do not swamp the others. Splits that would push the free-edge count past
    ``max_edges`` are skipped.
    """
    trail = []
    for _ in range(depth):
        cands = candidate_moves(s)
        if max_edges is not None and s.e >= max_edges:
            cands = [c for c in cands if c[0] not in ("I-split", "II-split")] or cands
        kinds = sorted({c[0] for c in cands})
        kind = rng.choice(kinds)
        move = rng.choice([c for c in cands if c[0] == kind])
        s = apply_move(s, move)
        trail.append((move, s))
    return trail
