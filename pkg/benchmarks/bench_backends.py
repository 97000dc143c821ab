#!/usr/bin/env python3
"""Benchmark: compiled versus pure-Python elimination kernels.

Times the two hot operations (exact Bareiss rank over Python ints and
GF(p) row reduction) on matrices the oracle actually produces, then an
end-to-end verdict for a non-free multiplicity under both backends.

Run:  python benchmarks/bench_backends.py
"""
import os
import sys
import time

import numpy as np

from multibraid import _pure

try:
    from multibraid import _speed
except ImportError:
    _speed = None

from multibraid import oracle
from multibraid.exactalg import binom2, _mono_entries


def build_local_matrix(m, d):
    rows, total = oracle._assemble_local_exact(tuple(m), d)
    return rows, total


def build_global_matrix(m, d):
    ideal = oracle.PowerIdeal.full(tuple(m))
    axis, general = oracle._split_axis(ideal)
    covered, rowidx = oracle._covered_and_rows(axis, d)
    cols = oracle._general_columns(general, d, rowidx)
    dense = []
    for col in cols:
        row = [0] * len(rowidx)
        for ri, c in col:
            row[ri] = c
        dense.append(row)
    return dense


def time_call(fn, *args, repeat=5):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def bench_exact(name, rows):
    shape = f"{len(rows)}x{len(rows[0]) if rows else 0}"
    tp, rp = time_call(lambda: _pure.bareiss_rank([r[:] for r in rows]))
    line = f"  {name:<38} {shape:>9}  pure {tp * 1e3:8.2f} ms"
    if _speed is not None:
        tc, rc = time_call(lambda: _speed.bareiss_rank([r[:] for r in rows]))
        assert rc == rp, "backends disagree"
        line += f"   cython {tc * 1e3:8.2f} ms   speedup {tp / tc:5.1f}x"
    print(line)


def bench_modp(name, rows, p=oracle.DEFAULT_PRIME):
    mat = np.array(rows, dtype=np.int64) % p if rows else np.zeros((0, 0), np.int64)
    shape = f"{mat.shape[0]}x{mat.shape[1]}"
    tp, rp = time_call(lambda: _pure.rank_mod_p(mat.copy(), p))
    line = f"  {name:<38} {shape:>9}  pure {tp * 1e3:8.2f} ms"
    if _speed is not None:
        tc, rc = time_call(lambda: _speed.rank_mod_p(mat.copy(), p))
        assert rc == rp, "backends disagree"
        line += f"   cython {tc * 1e3:8.2f} ms   speedup {tp / tc:5.1f}x"
    print(line)


def main():
    print(f"compiled backend available: {_speed is not None}")
    print("(oracle timings benefit from the package's per-triangle caches;"
          " matrix benches are cache-independent)")
    print()
    print("exact Bareiss rank (arbitrary-precision integers)")
    for m, d in [((3, 2, 3, 3, 2, 3), 4), ((3, 2, 3, 3, 2, 3), 6),
                 ((4, 1, 3, 1, 3, 1), 8), ((2, 4, 1, 3, 2, 4), 7)]:
        rows, _ = build_local_matrix(m, d)
        bench_exact(f"local syzygy span m={m} d={d}", rows)
    for m, d in [((4, 4, 4, 4, 4, 4), 6), ((5, 5, 5, 5, 5, 5), 8)]:
        rows = build_global_matrix(m, d)
        bench_exact(f"global Macaulay (reduced) m={m} d={d}", rows)
    print()
    print("GF(p) row reduction (pre-screen path)")
    for m, d in [((3, 2, 3, 3, 2, 3), 6), ((4, 1, 3, 1, 3, 1), 9),
                 ((1, 1, 1, 1, 4, 4), 9)]:
        rows, _ = build_local_matrix(m, d)
        bench_modp(f"local syzygy span m={m} d={d}", rows)
    print()
    print("end-to-end oracle verdict (current backend)")
    for m in [(3, 2, 3, 3, 2, 3), (2, 2, 1, 5, 3, 3), (4, 4, 4, 4, 4, 4)]:
        t, res = time_call(lambda: oracle.is_locally_generated(m), repeat=3)
        print(f"  m={m}: {'free' if res[0] else f'gap {res[1]}'}  {t * 1e3:8.2f} ms")
    t, res = time_call(lambda: oracle.is_locally_generated((3, 2, 3, 3, 2, 3),
                                                           prescreen=False), repeat=3)
    print(f"  m=(3, 2, 3, 3, 2, 3) exact-only: {t * 1e3:8.2f} ms")


if __name__ == "__main__":
    sys.exit(main())
