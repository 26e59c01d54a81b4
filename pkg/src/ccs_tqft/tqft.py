"""TQFT matrices Z_M on colour-tuple bases, their composition and the cylinder checks.

Rows are indexed by out-tuples and columns by in-tuples, each enumerated
lexicographically by element index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .analysis import Check, two_conjugacy_classes
from .crossed import CrossedModule
from .errors import ArityMismatch, ModuleMismatch, ParityMismatch, SizeLimit
from .invariant import all_invariants, boundary_tuples
from .linalg import rank_exact
from .scalar import ExactScalar
from .surface import SurfaceComplex, make_cylinder

MAX_MATRIX_ENTRIES = 10 ** 6


@dataclass(frozen=True)
class TqftMatrix:
    cm: CrossedModule
    n_in: int
    n_out: int
    entries: tuple[tuple[ExactScalar, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def rows(self) -> list[tuple[int, ...]]:
        return boundary_tuples(self.cm.g.order, self.n_out)

    def cols(self) -> list[tuple[int, ...]]:
        return boundary_tuples(self.cm.g.order, self.n_in)

    def entry(self, out: tuple[int, ...], in_: tuple[int, ...]) -> ExactScalar:
        return self.entries[self.rows().index(tuple(out))][self.cols().index(tuple(in_))]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TqftMatrix):
            return NotImplemented
        return (self.cm == other.cm and self.n_in == other.n_in
                and self.n_out == other.n_out and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.n_in, self.n_out, self.entries))

    def apply(self, vec: list[ExactScalar | Fraction | int]) -> list[ExactScalar]:
        """Z applied to a column vector over the in-basis."""
        out = []
        for row in self.entries:
            acc = ExactScalar(0)
            for z, x in zip(row, vec):
                acc = acc + z * x
            out.append(acc)
        return out

    def rational_rows(self) -> list[list[Fraction]]:
        """Coefficients with the shared sqrt(|G|) factor dropped (rank is unaffected)."""
        parities = {z.half_power for row in self.entries for z in row if z}
        if len(parities) > 1:
            raise ParityMismatch("matrix mixes rational and sqrt(|G|) entries")
        return [[z.coeff for z in row] for row in self.entries]

    def rank(self) -> int:
        return rank_exact(self.rational_rows())

    def to_json(self) -> dict:
        return {
            "module": self.cm.name,
            "n_in": self.n_in,
            "n_out": self.n_out,
            "rows": [list(r) for r in self.rows()],
            "cols": [list(c) for c in self.cols()],
            "entries": [[z.to_json() for z in row] for row in self.entries],
        }

    def to_csv(self, as_float: bool = False) -> str:
        head = ["out\\in"] + [" ".join(map(str, c)) or "()" for c in self.cols()]
        lines = [",".join(head)]
        for r, row in zip(self.rows(), self.entries):
            cells = [f"{float(z):.12g}" if as_float else z.render() for z in row]
            lines.append(",".join([" ".join(map(str, r)) or "()"] + cells))
        return "\n".join(lines) + "\n"


def matrix_of(s: SurfaceComplex, cm: CrossedModule, mode: str = "fast", **kw) -> TqftMatrix:
    n_entries = cm.g.order ** (s.n_in + s.n_out)
    if n_entries > MAX_MATRIX_ENTRIES:
        raise SizeLimit(f"matrix with {n_entries} entries exceeds cap {MAX_MATRIX_ENTRIES}")
    inv = all_invariants(s, cm, mode, **kw)
    rows = boundary_tuples(cm.g.order, s.n_out)
    cols = boundary_tuples(cm.g.order, s.n_in)
    entries = tuple(tuple(inv[c, r] for c in cols) for r in rows)
    return TqftMatrix(cm, s.n_in, s.n_out, entries)


def compose(z2: TqftMatrix, z1: TqftMatrix) -> TqftMatrix:
    """Z2 o Z1: sum over the shared middle colours."""
    if z1.cm != z2.cm:
        raise ModuleMismatch("matrices come from different crossed modules")
    if z1.n_out != z2.n_in:
        raise ArityMismatch(f"cannot compose {z1.n_out} outputs into {z2.n_in} inputs")
    mid = len(z1.entries)
    entries = []
    for row in z2.entries:
        out_row = []
        for c in range(len(z1.entries[0])):
            acc = ExactScalar(0)
            for j in range(mid):
                acc = acc + row[j] * z1.entries[j][c]
            out_row.append(acc)
        entries.append(tuple(out_row))
    return TqftMatrix(z1.cm, z1.n_in, z2.n_out, tuple(entries))


def check_cylinder_identity(cm: CrossedModule) -> list[Check]:
    from .analysis import cylinder_identity
    return cylinder_identity(cm)


def class_eigenvector_check(cm: CrossedModule, zc: TqftMatrix | None = None) -> list[Check]:
    """Each 2-conjugacy class indicator is fixed by Z_C, and the fixed space
    has dimension equal to the number of classes."""
    zc = zc or matrix_of(make_cylinder(), cm)
    part = two_conjugacy_classes(cm)
    n = cm.g.order
    fixed = True
    for cl in part.classes:
        vec = [ExactScalar(1 if x in cl else 0) for x in range(n)]
        if zc.apply(vec) != vec:
            fixed = False
    rank = zc.rank()
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    minus_i = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(zc.rational_rows(), ident)]
    eigen_dim = n - rank_exact(minus_i)
    return [
        Check("class indicators fixed by Z_C", fixed),
        Check("rank Z_C = #classes", rank == len(part), f"{rank} vs {len(part)}"),
        Check("dim eigenvalue-1 space = #classes", eigen_dim == len(part),
              f"{eigen_dim} vs {len(part)}"),
    ]
