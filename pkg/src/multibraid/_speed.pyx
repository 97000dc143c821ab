# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels.

Same contracts as ``_pure``: exact fraction-free Bareiss elimination over
Python integers (arbitrary precision preserved; Cython removes the loop
and indexing overhead) and GF(p) row reduction on int64 arrays with the
inner loops running without the GIL.
"""

NAME = "cython"


def bareiss_rank(list rows):
    """Exact rank of an integer matrix given as a list of lists (consumed)."""
    cdef Py_ssize_t nr = len(rows)
    if nr == 0:
        return 0
    cdef Py_ssize_t nc = len(<list>rows[0])
    cdef Py_ssize_t rank = 0, c, i, j, piv
    cdef object prev = 1
    cdef object p, a, best, mag, q, d
    cdef list prow, ri
    for c in range(nc):
        if rank == nr:
            break
        piv = -1
        best = None
        for i in range(rank, nr):
            a = (<list>rows[i])[c]
            if a != 0:
                mag = -a if a < 0 else a
                if piv < 0 or mag < best:
                    piv = i
                    best = mag
        if piv < 0:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = <list>rows[rank]
        p = prow[c]
        for i in range(rank + 1, nr):
            ri = <list>rows[i]
            a = ri[c]
            if a != 0:
                for j in range(c + 1, nc):
                    q = p * ri[j] - a * prow[j]
                    if q == 0:
                        ri[j] = 0
                    else:
                        d = q // prev
                        if d * prev != q:
                            raise ArithmeticError("inexact Bareiss division")
                        ri[j] = d
                ri[c] = 0
            elif p != prev:
                # rows not hit by the pivot still carry the p/prev scaling
                for j in range(c + 1, nc):
                    q = ri[j]
                    if q != 0:
                        d = (p * q) // prev
                        if d * prev != p * q:
                            raise ArithmeticError("inexact Bareiss division")
                        ri[j] = d
        prev = p
        rank += 1
    return rank


def rank_mod_p(a, long long p):
    """Rank over GF(p) of an int64 numpy array (clobbered).  p < 2**31."""
    cdef long long[:, ::1] m = a
    cdef Py_ssize_t nr = m.shape[0]
    cdef Py_ssize_t nc = m.shape[1]
    if nr == 0 or nc == 0:
        return 0
    cdef Py_ssize_t rank = 0, c, i, j, piv
    cdef long long v, inv, f
    with nogil:
        for c in range(nc):
            if rank == nr:
                break
            piv = -1
            for i in range(rank, nr):
                v = m[i, c] % p
                if v < 0:
                    v += p
                m[i, c] = v
                if v != 0 and piv < 0:
                    piv = i
            if piv < 0:
                continue
            if piv != rank:
                for j in range(c, nc):
                    v = m[rank, j]
                    m[rank, j] = m[piv, j]
                    m[piv, j] = v
            inv = _inverse_mod(m[rank, c], p)
            for j in range(c, nc):
                v = m[rank, j] % p
                if v < 0:
                    v += p
                m[rank, j] = (v * inv) % p
            for i in range(rank + 1, nr):
                f = m[i, c] % p
                if f < 0:
                    f += p
                if f != 0:
                    for j in range(c, nc):
                        v = (m[i, j] - f * m[rank, j]) % p
                        if v < 0:
                            v += p
                        m[i, j] = v
            rank += 1
    return rank


cdef long long _inverse_mod(long long x, long long p) nogil:
    # Fermat: x^(p-2) mod p, square and multiply
    cdef long long result = 1
    cdef long long base = x % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result
