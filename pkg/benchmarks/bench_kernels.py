"""Compare the numba and numpy counting backends.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--workers 1]

Each case counts fake-flat colourings of a surface refined by a fixed
sequence of moves; both backends must return the same count.
"""

from __future__ import annotations

import argparse
import random
import time

from ccs_tqft import _kernels
from ccs_tqft.crossed import fixture, identity_module
from ccs_tqft.groups import make_symmetric
from ccs_tqft.invariant import count_fast
from ccs_tqft.surface import catalogue_surface, move_i_split


def refined(name: str, splits: int):
    s = catalogue_surface(name)
    rng = random.Random(0)
    for _ in range(splits):
        s = move_i_split(s, rng.choice(s.free_edges).id)
    return s


CASES = [
    ("torus+3 / X2 (S3)", lambda: (refined("torus", 3), fixture("X2"))),
    ("torus+5 / X2 (S3)", lambda: (refined("torus", 5), fixture("X2"))),
    ("torus+6 / X2 (S3)", lambda: (refined("torus", 6), fixture("X2"))),
    ("sphere+6 / X4", lambda: (refined("sphere", 6), fixture("X4"))),
    ("torus+2 / id(S4)", lambda: (refined("torus", 2), identity_module(make_symmetric(4)))),
]


def best(fn, repeat: int) -> tuple[float, int]:
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()
    kernels = {"numpy": _kernels.count_range_numpy}
    if _kernels.HAVE_NUMBA:
        kernels["numba"] = _kernels.count_range_numba
    print(f"{'case':24} {'states':>10} " + " ".join(f"{k:>10}" for k in kernels) + "  speedup")
    for label, make in CASES:
        s, cm = make()
        states = cm.g.order ** s.e
        row, counts = {}, set()
        for name, kernel in kernels.items():
            count_fast(s, cm, kernel=kernel)  # warm-up / JIT compile
            t, n = best(lambda: count_fast(s, cm, workers=args.workers, kernel=kernel), args.repeat)
            row[name] = t
            counts.add(n)
        assert len(counts) == 1, f"backends disagree on {label}: {counts}"
        speed = f"{row['numpy'] / row['numba']:7.1f}x" if "numba" in row else "      -"
        print(f"{label:24} {states:>10} " + " ".join(f"{row[k]:9.4f}s" for k in kernels) + f"  {speed}")


if __name__ == "__main__":
    main()
