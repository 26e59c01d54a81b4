"""Property suites run by ``ccs-tqft verify`` and ``ccs-tqft report``.

Each suite returns a list of :class:`Check` records; nothing here raises on
a failed identity, so a report always covers every suite.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import analysis
from .analysis import Check
from .crossed import CrossedModule
from .errors import CcsError, SizeLimit
from .groups import commuting_fraction, conjugacy_classes
from .invariant import (
    all_invariants,
    basepoint_shift_check,
    closed_form_for,
    flat_count_h_trivial,
    invariant,
    orientation_flip_check,
)
from .surface import CATALOGUE, catalogue_surface, glue, random_move_sequence, validate
from .tqft import class_eigenvector_check, compose, matrix_of

GLUINGS = [
    ("cylinder", "cylinder"),
    ("cylinder", "disk_in"),     # disk o cylinder
    ("disk_out", "cylinder"),    # cylinder o disk
    ("disk_out", "disk_in"),     # sphere
]


def _guard(name: str, fn) -> list[Check]:
    try:
        return fn()
    except SizeLimit as exc:
        return [Check(name, False, f"size limit: {exc}")]
    except CcsError as exc:
        return [Check(name, False, f"{type(exc).__name__}: {exc}")]


def suite_axioms(cm: CrossedModule) -> list[Check]:
    k, a = cm.kernel_k, cm.image_a
    central = all(cm.h.mul(x, f) == cm.h.mul(f, x) for x in k for f in cm.h.elements())
    return [
        Check("crossed-module axioms", True, "verified at construction"),
        Check("kernel central in H", central),
        Check("|H| = |A||K|", cm.h.order == len(a) * len(k)),
        Check("kernel normal in H", k.is_normal()),
    ]


def suite_closed_forms(cm: CrossedModule) -> list[Check]:
    out = []
    for name in CATALOGUE:
        inv = all_invariants(catalogue_surface(name), cm)
        ok = all(closed_form_for(name, cm, gi, go) == z for (gi, go), z in inv.items())
        out.append(Check(f"closed form = enumeration ({name})", ok))
    return out


def suite_oracle(cm: CrossedModule) -> list[Check]:
    out = []
    for name in CATALOGUE:
        s = catalogue_surface(name)
        ok = all_invariants(s, cm, "fast") == all_invariants(s, cm, "oracle")
        out.append(Check(f"fast = oracle ({name})", ok))
    return out


def suite_moves(cm: CrossedModule, sequences: int = 20, depth: int = 6, seed: int = 0,
                max_edges: int | None = None) -> list[Check]:
    rng = random.Random(seed)
    out = []
    for name in CATALOGUE:
        s = catalogue_surface(name)
        ref = all_invariants(s, cm)
        bad = []
        for i in range(sequences):
            trail = random_move_sequence(s, rng, rng.randint(1, depth), max_edges=max_edges)
            final = trail[-1][1]
            validate(final)
            if all_invariants(final, cm) != ref:
                bad.append([m for m, _ in trail])
        out.append(Check(f"move invariance ({name}, {sequences} sequences)", not bad,
                         f"first failure: {bad[0]}" if bad else ""))
    return out


def suite_orientation_basepoint(cm: CrossedModule) -> list[Check]:
    out = []
    for name in CATALOGUE:
        s = catalogue_surface(name)
        flips = all(orientation_flip_check(s, cm, e.id) for e in s.free_edges)
        shifts = all(basepoint_shift_check(s, cm, f.id, p)
                     for f in s.faces for p in range(len(f.word)))
        out.append(Check(f"orientation flips ({name})", flips))
        out.append(Check(f"basepoint shifts ({name})", shifts))
    return out


def suite_gluing(cm: CrossedModule) -> list[Check]:
    out = []
    for n1, n2 in GLUINGS:
        m1, m2 = catalogue_surface(n1), catalogue_surface(n2)
        glued = matrix_of(glue(m1, m2), cm)
        ok = glued == compose(matrix_of(m2, cm), matrix_of(m1, cm))
        out.append(Check(f"Z({n2} o {n1}) = Z({n2}) Z({n1})", ok))
    return out


def suite_cylinder(cm: CrossedModule) -> list[Check]:
    zc = matrix_of(catalogue_surface("cylinder"), cm)
    return ([Check("Z_C o Z_C = Z_C", compose(zc, zc) == zc)]
            + analysis.cylinder_identity(cm)
            + class_eigenvector_check(cm, zc))


def suite_two_group(cm: CrossedModule) -> list[Check]:
    failures = analysis.verify_witness_bijections(cm)
    out = [Check("witness maps are bijections", not failures, "; ".join(failures[:3]))]
    return out + analysis.class_size_check(cm) + analysis.verify_gcf_proposition(cm)


def suite_h_trivial(cm: CrossedModule) -> list[Check]:
    if cm.h.order != 1:
        return []
    out = []
    for name in ("sphere", "torus"):
        s = catalogue_surface(name)
        expected = Fraction(flat_count_h_trivial(s, cm), cm.g.order ** s.v)
        out.append(Check(f"H-trivial reduction ({name})", invariant(s, cm) == expected))
    n_cc = len(conjugacy_classes(cm.g))
    out.append(Check("torus = #conjugacy classes = commuting fraction * |G|",
                     invariant(catalogue_surface("torus"), cm) == n_cc
                     == commuting_fraction(cm.g) * cm.g.order, str(n_cc)))
    return out


def run_all(cm: CrossedModule, sequences: int = 20, seed: int = 0) -> dict[str, list[Check]]:
    suites = {
        "axioms": lambda: suite_axioms(cm),
        "closed_forms": lambda: suite_closed_forms(cm),
        "oracle": lambda: suite_oracle(cm),
        "moves": lambda: suite_moves(cm, sequences=sequences, seed=seed),
        "orientation_basepoint": lambda: suite_orientation_basepoint(cm),
        "gluing": lambda: suite_gluing(cm),
        "cylinder": lambda: suite_cylinder(cm),
        "two_group": lambda: suite_two_group(cm),
        "h_trivial": lambda: suite_h_trivial(cm),
    }
    return {name: _guard(name, fn) for name, fn in suites.items()}
