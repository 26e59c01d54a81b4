"""Counting fake-flat colourings and the normalized surface invariant.

Two routes count colourings with fixed boundary colours:

* ``oracle`` walks every assignment of G to free 1-cells and H to 2-cells
  and tests the face condition directly;
* ``fast`` walks only the G-assignments. A face whose word product p lies
  in the image A of the boundary map admits exactly |K| face colours, and
  none otherwise, so each surviving assignment contributes |K|^faces.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .crossed import CrossedModule
from .errors import ArityMismatch, IdentityViolation, MissingColour, SizeLimit, UnknownKind
from .scalar import ExactScalar
from .surface import SurfaceComplex, flip_edge, with_basepoint

DEFAULT_MAX_FAST_STATES = 10 ** 8
DEFAULT_MAX_ORACLE_STATES = 10 ** 7


def max_fast_states() -> int:
    return int(os.environ.get("CCS_TQFT_MAX_FAST_STATES", DEFAULT_MAX_FAST_STATES))


def max_oracle_states() -> int:
    return int(os.environ.get("CCS_TQFT_MAX_ORACLE_STATES", DEFAULT_MAX_ORACLE_STATES))


@dataclass(frozen=True)
class Colouring:
    edge_colour: Mapping[str, int]
    face_colour: Mapping[str, int]


def _boundary_colours(s: SurfaceComplex, g_in: Sequence[int], g_out: Sequence[int]) -> dict[str, int]:
    if len(g_in) != s.n_in or len(g_out) != s.n_out:
        raise ArityMismatch(f"expected {s.n_in} in / {s.n_out} out colours, "
                            f"got {len(g_in)} / {len(g_out)}")
    out = {e.id: int(g) for e, g in zip(s.in_edges(), g_in)}
    out.update({e.id: int(g) for e, g in zip(s.out_edges(), g_out)})
    return out


def face_product(s: SurfaceComplex, cm: CrossedModule, face_id: str, colours: Mapping[str, int]) -> int:
    """Ordered product of edge colours around a face, from its basepoint."""
    g = cm.g
    acc = 0
    for r in s.face_map[face_id].read():
        c = colours[r.edge]
        acc = g.mul(acc, c if r.sign > 0 else g.inv(c))
    return acc


def check_fake_flat(s: SurfaceComplex, cm: CrossedModule, col: Colouring,
                    g_in: Sequence[int] = (), g_out: Sequence[int] = ()) -> bool:
    colours = dict(col.edge_colour)
    colours.update(_boundary_colours(s, g_in, g_out))
    missing = [e.id for e in s.free_edges if e.id not in colours]
    missing += [f.id for f in s.faces if f.id not in col.face_colour]
    if missing:
        raise MissingColour(f"no colour for {missing}")
    return all(face_product(s, cm, f.id, colours) == cm.d(col.face_colour[f.id]) for f in s.faces)


def enumerate_colourings(s: SurfaceComplex, cm: CrossedModule,
                         g_in: Sequence[int] = (), g_out: Sequence[int] = (),
                         max_states: int | None = None):
    """Yield every fake-flat colouring with the given boundary colours (brute force)."""
    cap = max_oracle_states() if max_states is None else max_states
    free = [e.id for e in s.free_edges]
    fids = [f.id for f in s.faces]
    states = cm.g.order ** len(free) * cm.h.order ** len(fids)
    if states > cap:
        raise SizeLimit(f"oracle enumeration of {states} states exceeds cap {cap}")
    bcol = _boundary_colours(s, g_in, g_out)
    for gs in itertools.product(range(cm.g.order), repeat=len(free)):
        colours = dict(bcol)
        colours.update(zip(free, gs))
        prods = [face_product(s, cm, f, colours) for f in fids]
        for hs in itertools.product(range(cm.h.order), repeat=len(fids)):
            if all(cm.d(h) == p for h, p in zip(hs, prods)):
                yield Colouring(dict(zip(free, gs)), dict(zip(fids, hs)))


def count_oracle(s: SurfaceComplex, cm: CrossedModule, g_in=(), g_out=(),
                 max_states: int | None = None) -> int:
    return sum(1 for _ in enumerate_colourings(s, cm, g_in, g_out, max_states))


@dataclass(frozen=True)
class CompiledSurface:
    """Flat array form of a surface for the kernels.

    Slots 0..n_fixed-1 hold in-boundary then out-boundary colours; the
    remaining slots are the free edges in list order.
    """

    n_fixed: int
    n_free: int
    n_faces: int
    face_ptr: np.ndarray
    word_slot: np.ndarray
    word_inv: np.ndarray


def compile_surface(s: SurfaceComplex) -> CompiledSurface:
    order = [e.id for e in s.in_edges()] + [e.id for e in s.out_edges()]
    n_fixed = len(order)
    order += [e.id for e in s.free_edges]
    slot = {eid: i for i, eid in enumerate(order)}
    ptr, ws, wi = [0], [], []
    for f in s.faces:
        for r in f.read():
            ws.append(slot[r.edge])
            wi.append(r.sign < 0)
        ptr.append(len(ws))
    return CompiledSurface(n_fixed, len(order) - n_fixed, len(s.faces),
                           np.array(ptr, dtype=np.int64), np.array(ws, dtype=np.int64),
                           np.array(wi, dtype=np.bool_))


def _module_arrays(cm: CrossedModule):
    return (np.ascontiguousarray(cm.g.table, dtype=np.int64),
            np.ascontiguousarray(cm.g.inverse, dtype=np.int64),
            np.ascontiguousarray(cm.image_a.mask))


def count_fast(s: SurfaceComplex, cm: CrossedModule, g_in=(), g_out=(), *,
               workers: int = 1, max_states: int | None = None,
               compiled: CompiledSurface | None = None, kernel=None) -> int:
    cap = max_fast_states() if max_states is None else max_states
    c = compiled or compile_surface(s)
    total = cm.g.order ** c.n_free
    if total > cap:
        raise SizeLimit(f"fast enumeration of {total} states exceeds cap {cap}")
    bcol = _boundary_colours(s, g_in, g_out)
    colours = np.zeros(c.n_fixed + c.n_free, dtype=np.int64)
    for i, e in enumerate(s.in_edges() + s.out_edges()):
        colours[i] = bcol[e.id]
    table, inverse, in_image = _module_arrays(cm)
    args = (table, inverse, in_image, colours, c.n_fixed, c.face_ptr, c.word_slot, c.word_inv)
    hits = _kernels.count_parallel(args, total, workers, kernel)
    return hits * len(cm.kernel_k) ** c.n_faces


def count_colourings(s: SurfaceComplex, cm: CrossedModule, g_in=(), g_out=(),
                     mode: str = "fast", **kw) -> int:
    """Number of fake-flat colourings with the given boundary colours.

    ``mode`` is ``fast``, ``oracle`` or ``both`` (both are computed and must agree).
    """
    if mode == "fast":
        return count_fast(s, cm, g_in, g_out, **kw)
    if mode == "oracle":
        return count_oracle(s, cm, g_in, g_out, kw.get("max_states"))
    if mode == "both":
        a = count_fast(s, cm, g_in, g_out, **kw)
        b = count_oracle(s, cm, g_in, g_out)
        if a != b:
            raise IdentityViolation(f"fast count {a} != oracle count {b} for {s.name} "
                                    f"in={tuple(g_in)} out={tuple(g_out)}")
        return a
    raise ValueError(f"unknown mode {mode!r}")


def normalization(s: SurfaceComplex, cm: CrossedModule) -> ExactScalar:
    """|H|^(v-e) / |G|^((m+n)/2 + v)."""
    v, e = s.v, s.e
    h_part = ExactScalar(Fraction(cm.h.order) ** (v - e))
    return h_part * ExactScalar.sqrt_power(cm.g.order, -(s.n_in + s.n_out + 2 * v))


def invariant(s: SurfaceComplex, cm: CrossedModule, g_in=(), g_out=(),
              mode: str = "fast", **kw) -> ExactScalar:
    return normalization(s, cm) * count_colourings(s, cm, g_in, g_out, mode, **kw)


def boundary_tuples(order: int, n: int) -> list[tuple[int, ...]]:
    """All n-tuples of element indices, lexicographic."""
    return list(itertools.product(range(order), repeat=n))


def all_invariants(s: SurfaceComplex, cm: CrossedModule, mode: str = "fast",
                   **kw) -> dict[tuple[tuple[int, ...], tuple[int, ...]], ExactScalar]:
    """Invariant for every (in, out) boundary colouring."""
    norm = normalization(s, cm)
    compiled = compile_surface(s) if mode != "oracle" else None
    if compiled is not None:
        kw = dict(kw, compiled=compiled)
    out = {}
    for gi in boundary_tuples(cm.g.order, s.n_in):
        for go in boundary_tuples(cm.g.order, s.n_out):
            out[gi, go] = norm * count_colourings(s, cm, gi, go, mode, **kw)
    return out


# --- closed forms --------------------------------------------------------

def torus_triples(cm: CrossedModule) -> int:
    """#{(h, g1, g2) : boundary(h) = g1 g2 g1^-1 g2^-1}."""
    t, inv = cm.g.table, cm.g.inverse
    x = np.arange(cm.g.order)
    comm = t[t[t[x[:, None], x[None, :]], inv[:, None]], inv[None, :]]
    return int(np.count_nonzero(cm.image_a.mask[comm])) * len(cm.kernel_k)


def closed_form(kind: str, cm: CrossedModule, *args: int) -> ExactScalar:
    """Closed-form invariant of the minimal sphere, disk, cylinder and torus.

    Boundary args: disk/disk_in/disk_out take g; cylinder takes (g1, g2)
    with g1 the in-colour and g2 the out-colour.
    """
    G, H, K = cm.g.order, cm.h.order, len(cm.kernel_k)
    if kind == "sphere":
        return ExactScalar(Fraction(H * K, G))
    if kind in ("disk", "disk_in", "disk_out"):
        (g,) = args
        dg = 1 if g in cm.image_a else 0
        return ExactScalar(K * dg) * ExactScalar.sqrt_power(G, -1)
    if kind == "cylinder":
        from .analysis import c_function
        g1, g2 = args
        return ExactScalar(Fraction(c_function(cm, g1, g2), H * G))
    if kind == "torus":
        return ExactScalar(Fraction(torus_triples(cm), G * H))
    raise UnknownKind(f"no closed form for {kind!r}")


def closed_form_for(kind: str, cm: CrossedModule, g_in=(), g_out=()) -> ExactScalar:
    """closed_form with arguments taken from boundary tuples."""
    if kind == "cylinder":
        return closed_form(kind, cm, g_in[0], g_out[0])
    if kind == "disk_in":
        return closed_form(kind, cm, g_in[0])
    if kind == "disk_out":
        return closed_form(kind, cm, g_out[0])
    return closed_form(kind, cm)


# --- orientation / basepoint independence --------------------------------

def orientation_flip_check(s: SurfaceComplex, cm: CrossedModule, edge_id: str, **kw) -> bool:
    """Every invariant is unchanged when one cut/internal 1-cell is reversed."""
    return all_invariants(s, cm, **kw) == all_invariants(flip_edge(s, edge_id), cm, **kw)


def basepoint_map(s: SurfaceComplex, cm: CrossedModule, face_id: str, new_pos: int,
                  col: Colouring, bcol: Mapping[str, int]) -> Colouring:
    """Image of a colouring under h' = g^-1 > h, g the word from old to new basepoint."""
    f = s.face_map[face_id]
    colours = dict(bcol)
    colours.update(col.edge_colour)
    g = 0
    L = len(f.word)
    for t in range((new_pos - f.basepoint) % L):
        r = f.word[(f.basepoint + t) % L]
        c = colours[r.edge]
        g = cm.g.mul(g, c if r.sign > 0 else cm.g.inv(c))
    faces = dict(col.face_colour)
    faces[face_id] = cm.act(cm.g.inv(g), faces[face_id])
    return Colouring(dict(col.edge_colour), faces)


def _frozen_col(c: Colouring):
    return (tuple(sorted(c.edge_colour.items())), tuple(sorted(c.face_colour.items())))


def basepoint_shift_check(s: SurfaceComplex, cm: CrossedModule, face_id: str, new_pos: int,
                          verify_bijection: bool = True, **kw) -> bool:
    """Invariants unchanged under a basepoint change, and h' = g^-1 > h is a bijection
    between the two colouring sets for every boundary colouring."""
    s2 = with_basepoint(s, face_id, new_pos)
    if all_invariants(s, cm, **kw) != all_invariants(s2, cm, **kw):
        return False
    if not verify_bijection:
        return True
    for gi in boundary_tuples(cm.g.order, s.n_in):
        for go in boundary_tuples(cm.g.order, s.n_out):
            bcol = _boundary_colours(s, gi, go)
            before = [basepoint_map(s, cm, face_id, new_pos, c, bcol)
                      for c in enumerate_colourings(s, cm, gi, go)]
            image_set = {_frozen_col(c) for c in before}
            after = {_frozen_col(c) for c in enumerate_colourings(s2, cm, gi, go)}
            if len(image_set) != len(before) or image_set != after:
                return False
    return True


def flat_count_h_trivial(s: SurfaceComplex, cm: CrossedModule) -> int:
    """Number of flat G-colourings of a closed surface (face words equal to 1), by brute force."""
    free = [e.id for e in s.free_edges]
    n = 0
    for gs in itertools.product(range(cm.g.order), repeat=len(free)):
        colours = dict(zip(free, gs))
        if all(face_product(s, cm, f.id, colours) == 0 for f in s.faces):
            n += 1
    return n
