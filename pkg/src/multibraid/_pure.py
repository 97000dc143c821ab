"""Pure-Python elimination kernels (fallback backend).

Same contracts as the compiled backend in ``_speed.pyx``: exact
fraction-free elimination over Python integers, and row reduction modulo a
word-size prime on numpy int64 arrays.  Selected automatically when the
extension is unavailable or MULTIBRAID_PURE=1 is set.
"""
from __future__ import annotations

import numpy as np

NAME = "pure"


def bareiss_rank(rows):
    """Exact rank of an integer matrix given as a list of lists.

    One-step Bareiss (fraction-free) elimination: every update is
    (p*a[i][j] - a[i][k]*a[k][j]) / prev with an exact integer division, so
    intermediate entries are minors of the input rather than growing
    rationals.  The input rows are consumed (mutated).
    """
    nr = len(rows)
    if nr == 0:
        return 0
    nc = len(rows[0])
    rank = 0
    prev = 1
    for c in range(nc):
        if rank == nr:
            break
        # smallest-magnitude pivot keeps the minors small
        piv = -1
        best = 0
        for i in range(rank, nr):
            a = rows[i][c]
            if a:
                a = -a if a < 0 else a
                if piv < 0 or a < best:
                    piv, best = i, a
        if piv < 0:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[c]
        for i in range(rank + 1, nr):
            ri = rows[i]
            a = ri[c]
            if a:
                for j in range(c + 1, nc):
                    q, r = divmod(p * ri[j] - a * prow[j], prev)
                    if r:
                        raise ArithmeticError("inexact Bareiss division")
                    ri[j] = q
                ri[c] = 0
            elif p != prev:
                # rows not hit by the pivot still carry the p/prev scaling
                for j in range(c + 1, nc):
                    if ri[j]:
                        q, r = divmod(p * ri[j], prev)
                        if r:
                            raise ArithmeticError("inexact Bareiss division")
                        ri[j] = q
        prev = p
        rank += 1
    return rank


def _primitive(vec):
    from math import gcd

    g = 0
    for x in vec:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        vec = [x // g for x in vec]
    for x in vec:
        if x:
            if x < 0:
                vec = [-y for y in vec]
            break
    return tuple(vec)


def int_kernel(rows, ncols):
    """Basis of the right null space of an integer matrix.

    ``rows`` is the matrix as a list of lists (may be empty when the matrix
    has no rows), ``ncols`` its column count.  Row-reduces the augmented
    transpose [M^T | I] fraction-free; rows whose left part vanishes carry
    kernel vectors in their right part.  Returns primitive integer tuples
    (gcd 1, leading entry positive) in a deterministic order.
    """
    nr = len(rows)
    if ncols == 0:
        return []
    aug = []
    for j in range(ncols):
        row = [rows[i][j] for i in range(nr)]
        row.extend(1 if t == j else 0 for t in range(ncols))
        aug.append(row)
    width = nr + ncols
    rank = 0
    prev = 1
    for c in range(nr):
        if rank == ncols:
            break
        piv = -1
        best = 0
        for i in range(rank, ncols):
            a = aug[i][c]
            if a:
                a = -a if a < 0 else a
                if piv < 0 or a < best:
                    piv, best = i, a
        if piv < 0:
            continue
        if piv != rank:
            aug[rank], aug[piv] = aug[piv], aug[rank]
        prow = aug[rank]
        p = prow[c]
        for i in range(rank + 1, ncols):
            ri = aug[i]
            a = ri[c]
            if a:
                for j in range(c + 1, width):
                    q, r = divmod(p * ri[j] - a * prow[j], prev)
                    if r:
                        raise ArithmeticError("inexact Bareiss division")
                    ri[j] = q
                ri[c] = 0
            elif p != prev:
                for j in range(c + 1, width):
                    if ri[j]:
                        q, r = divmod(p * ri[j], prev)
                        if r:
                            raise ArithmeticError("inexact Bareiss division")
                        ri[j] = q
        prev = p
        rank += 1
    out = []
    for i in range(rank, ncols):
        if any(aug[i][t] for t in range(nr)):
            raise ArithmeticError("kernel extraction left a nonzero row")
        out.append(_primitive(aug[i][nr:]))
    return out


def rank_mod_p(a, p):
    """Rank of an int64 numpy matrix over GF(p); ``a`` is clobbered.

    Requires p < 2**31 so that products of reduced entries fit in int64.
    """
    nr, nc = a.shape
    if nr == 0 or nc == 0:
        return 0
    rank = 0
    for c in range(nc):
        if rank == nr:
            break
        col = a[rank:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = rank + int(nz[0])
        if i != rank:
            a[[rank, i]] = a[[i, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank, c:] = (a[rank, c:] * inv) % p
        below = a[rank + 1:, c:]
        factors = below[:, 0]
        hit = np.nonzero(factors)[0]
        if hit.size:
            below[hit] = (below[hit] - factors[hit, None] * a[rank, c:][None, :]) % p
        rank += 1
    return rank
