"""2-conjugacy and the cylinder counting function C.

C(g1, g2) = #{(h, k) in H x G : boundary(h) = g1 k g2^-1 k^-1}. Two
elements are 2-conjugate when C(g1, g2) != 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .crossed import CrossedModule
from .errors import IdentityViolation, SizeLimit

MAX_W_SET = 10 ** 6


def _twisted(cm: CrossedModule, g1: int, g2: int, k: int) -> int:
    g = cm.g
    return g.mul(g.mul(g.mul(g1, k), g.inv(g2)), g.inv(k))


def c_function(cm: CrossedModule, g1: int, g2: int, mode: str = "fast") -> int:
    if mode == "oracle":
        return sum(1 for h in cm.h.elements() for k in cm.g.elements()
                   if cm.d(h) == _twisted(cm, g1, g2, k))
    hits = sum(1 for k in cm.g.elements() if _twisted(cm, g1, g2, k) in cm.image_a)
    return len(cm.kernel_k) * hits


def c_table(cm: CrossedModule) -> np.ndarray:
    """C(g1, g2) for all pairs, as an int64 |G| x |G| array."""
    t, inv = cm.g.table, cm.g.inverse
    n = cm.g.order
    x = np.arange(n)
    # w[g1, g2, k] = g1 k g2^-1 k^-1
    g1k = t[x[:, None, None], x[None, None, :]]
    w = t[t[g1k, inv[None, :, None]], inv[None, None, :]]
    hits = cm.image_a.mask[w].sum(axis=2)
    out = (hits * len(cm.kernel_k)).astype(np.int64)
    out.setflags(write=False)
    return out


def w_set(cm: CrossedModule, g1: int, g2: int) -> list[tuple[int, int]]:
    """W(g1, g2) as sorted (h, k) pairs."""
    if cm.h.order * cm.g.order > MAX_W_SET:
        raise SizeLimit("W-set enumeration exceeds cap")
    return [(h, k) for h in cm.h.elements() for k in cm.g.elements()
            if cm.d(h) == _twisted(cm, g1, g2, k)]


# --- witness maps --------------------------------------------------------

def symmetric_witness(cm: CrossedModule, h: int, k: int) -> tuple[int, int]:
    """W(g1, g2) -> W(g2, g1): (h, k) -> (k^-1 > h^-1, k^-1). Self-inverse."""
    ki = cm.g.inv(k)
    return cm.act(ki, cm.h.inv(h)), ki


def transitive_witness(cm: CrossedModule, hk1: tuple[int, int], hk2: tuple[int, int]) -> tuple[int, int]:
    """W(g1, g2) x W(g2, g3) -> W(g1, g3): ((h, k), (h', k')) -> (h (k > h'), k k')."""
    (h, k), (h2, k2) = hk1, hk2
    return cm.h.mul(h, cm.act(k, h2)), cm.g.mul(k, k2)


def constancy_maps(cm: CrossedModule, h: int, k: int):
    """Given (h, k) in W(g1, g2), the mutually inverse maps W(g1, g2) <-> W(g1, g1).

    alpha(h', k') = (h' ((k' k^-1) > h^-1), k' k^-1)
    beta(h'', k'') = (h'' (k'' > h), k'' k)
    """
    G, H = cm.g, cm.h

    def alpha(hk):
        h1, k1 = hk
        kk = G.mul(k1, G.inv(k))
        return H.mul(h1, cm.act(kk, H.inv(h))), kk

    def beta(hk):
        h1, k1 = hk
        return H.mul(h1, cm.act(k1, h)), G.mul(k1, k)

    return alpha, beta


def _is_bijection(f, g, src: list, dst: list) -> bool:
    s, d = set(src), set(dst)
    return ({f(x) for x in src} == d and {g(y) for y in dst} == s
            and all(g(f(x)) == x for x in src) and all(f(g(y)) == y for y in dst))


# --- classes -------------------------------------------------------------

@dataclass(frozen=True)
class TwoConjPartition:
    classes: list[list[int]]
    class_of: list[int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.classes)


def two_conjugacy_classes(cm: CrossedModule, verify: bool = True) -> TwoConjPartition:
    """Partition G by C != 0 using union-find; reflexivity, symmetry and
    transitivity are re-checked with explicit witnesses when ``verify``."""
    n = cm.g.order
    C = c_table(cm)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(n):
        for b in range(n):
            if C[a, b]:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    classes = sorted(groups.values())
    class_of = [0] * n
    for i, cl in enumerate(classes):
        for x in cl:
            class_of[x] = i
    part = TwoConjPartition(classes, class_of)
    if verify:
        _verify_equivalence(cm, C, part)
    return part


def _verify_equivalence(cm: CrossedModule, C: np.ndarray, part: TwoConjPartition) -> None:
    n = cm.g.order
    for g in range(n):
        if (0, 0) not in w_set(cm, g, g):
            raise IdentityViolation(f"(1_H, 1_G) not in W({g}, {g})")
    for a in range(n):
        for b in range(n):
            same = part.class_of[a] == part.class_of[b]
            if same != bool(C[a, b]):
                raise IdentityViolation(f"2-conjugacy not transitive at ({a}, {b})")
            if C[a, b]:
                h, k = w_set(cm, a, b)[0]
                if symmetric_witness(cm, h, k) not in set(w_set(cm, b, a)):
                    raise IdentityViolation(f"symmetric witness fails for ({a}, {b})")
    for a in range(n):
        for b in range(n):
            if not C[a, b]:
                continue
            w1 = w_set(cm, a, b)[0]
            for c in range(n):
                if C[b, c]:
                    w2 = w_set(cm, b, c)[0]
                    if transitive_witness(cm, w1, w2) not in set(w_set(cm, a, c)):
                        raise IdentityViolation(f"transitive witness fails for ({a}, {b}, {c})")


def verify_witness_bijections(cm: CrossedModule) -> list[str]:
    """Check the symmetry and class-constancy maps are bijections on every W set.

    Returns a list of failures (empty when all hold).
    """
    n = cm.g.order
    W = {(a, b): w_set(cm, a, b) for a in range(n) for b in range(n)}
    failures = []
    sym = lambda hk: symmetric_witness(cm, *hk)
    for (a, b), src in W.items():
        if not _is_bijection(sym, sym, src, W[b, a]):
            failures.append(f"symmetry map W({a},{b}) -> W({b},{a})")
        if src:
            alpha, beta = constancy_maps(cm, *src[0])
            if not _is_bijection(alpha, beta, src, W[a, a]):
                failures.append(f"constancy map W({a},{b}) -> W({a},{a})")
    return failures


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def class_size_check(cm: CrossedModule) -> list[Check]:
    C = c_table(cm)
    part = two_conjugacy_classes(cm)
    G, H = cm.g.order, cm.h.order
    out = [
        Check("C symmetric", bool(np.array_equal(C, C.T))),
    ]
    const = all(C[a, b] == C[a, a] for cl in part.classes for a in cl for b in cl)
    out.append(Check("C constant on classes", const))
    sizes = all(Fraction(G * H, int(C[cl[0], cl[0]])) == len(cl) for cl in part.classes)
    out.append(Check("class size = |G||H| / C(g,g)", sizes,
                     str([(len(cl), int(C[cl[0], cl[0]])) for cl in part.classes])))
    return out


def count_classes_by_squares(cm: CrossedModule) -> Fraction:
    C = c_table(cm).astype(object)
    G, H = cm.g.order, cm.h.order
    return Fraction(int((C * C).sum()), G * G * H * H)


def generalized_commuting_fraction(cm: CrossedModule) -> Fraction:
    """#{(h, g1, g2) : boundary(h) = [g1, g2]} / (|H| |G|^2), by direct triple count."""
    g = cm.g
    n = 0
    for g1 in g.elements():
        for g2 in g.elements():
            c = g.mul(g.mul(g.mul(g1, g2), g.inv(g1)), g.inv(g2))
            n += sum(1 for h in cm.h.elements() if cm.d(h) == c)
    return Fraction(n, cm.h.order * g.order ** 2)


def verify_gcf_proposition(cm: CrossedModule) -> list[Check]:
    C = c_table(cm)
    G, H = cm.g.order, cm.h.order
    n_classes = len(two_conjugacy_classes(cm))
    gcf = generalized_commuting_fraction(cm)
    squares = count_classes_by_squares(cm)
    torus_diag = Fraction(int(np.trace(C)), G * H)
    torus_sq = Fraction(int((C.astype(object) ** 2).sum()), G * G * H * H)
    return [
        Check("#classes = gcf * |G|", gcf * G == n_classes, f"{gcf} * {G} vs {n_classes}"),
        Check("#classes = sum C^2 / (|G||H|)^2", squares == n_classes, f"{squares} vs {n_classes}"),
        Check("row sums = |H||G|", bool(np.all(C.sum(axis=1) == H * G))),
        Check("torus = sum_g C(g,g)/(|G||H|) = sum C^2/(|G||H|)^2",
              torus_diag == torus_sq == gcf * G, f"{torus_diag}, {torus_sq}, {gcf * G}"),
    ]


def cylinder_identity(cm: CrossedModule) -> list[Check]:
    """sum_i C(g,i) C(i,j) = |H||G| C(g,j) for all g, j."""
    C = c_table(cm).astype(object)
    lhs = C.dot(C)
    rhs = cm.h.order * cm.g.order * C
    bad = [(int(a), int(b)) for a, b in np.argwhere(lhs != rhs)]
    if bad:
        raise IdentityViolation(f"cylinder identity fails at {bad[0]}")
    return [Check("sum_i C(g,i)C(i,j) = |H||G| C(g,j)", True)]


def class_report(cm: CrossedModule) -> dict:
    C = c_table(cm)
    part = two_conjugacy_classes(cm)
    gcf = generalized_commuting_fraction(cm)
    return {
        "module": cm.name,
        "order_g": cm.g.order,
        "order_h": cm.h.order,
        "classes": [
            {"members": cl, "size": len(cl), "c_gg": int(C[cl[0], cl[0]])} for cl in part.classes
        ],
        "n_classes": len(part),
        "gcf": f"{gcf.numerator}/{gcf.denominator}",
        "gcf_times_order": str(gcf * cm.g.order),
        "proposition_holds": gcf * cm.g.order == len(part),
    }
