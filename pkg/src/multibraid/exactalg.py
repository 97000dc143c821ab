"""Exact rational linear algebra and monomial bookkeeping in K[x, y, z].

Every verdict in this package reduces to exact ranks and kernels of integer
matrices.  Rational rows are cleared to integers first (rank and kernel are
unchanged by row scaling), then eliminated fraction-free, so no floating
point or single-prime arithmetic ever decides a result.  A reduction modulo
a 31-bit prime is available as a fast pre-screen; because the rank of an
integer matrix can only drop under reduction, callers can use it for
one-sided certificates but never for a final value on its own.

The hot kernels live in the compiled extension ``_speed`` when it built;
``_pure`` has identical semantics.  MULTIBRAID_PURE=1 forces the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from . import _pure

if os.environ.get("MULTIBRAID_PURE"):
    _impl = _pure
else:
    try:
        from . import _speed as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

#: Name of the elimination backend in use ("cython" or "pure").
BACKEND: str = _impl.NAME

#: Exact scalar type: arbitrary-precision rational, always in lowest terms
#: with positive denominator.
ExactScalar = Fraction

Mono = tuple[int, int, int]


def binom2(n: int) -> int:
    """n choose 2 with the convention that it vanishes for n < 2."""
    return n * (n - 1) // 2 if n >= 2 else 0


def nmono(degree: int) -> int:
    """Number of degree-d monomials in three variables (0 for d < 0)."""
    return comb(degree + 2, 2) if degree >= 0 else 0


@lru_cache(maxsize=None)
def mono_basis(degree: int) -> "MonoBasis":
    return MonoBasis(degree)


@dataclass(frozen=True)
class MonoBasis:
    """Monomials x^i y^j z^k of one degree in graded-lex order, x > y > z.

    The order is fixed once so matrix layouts are bit-reproducible across
    runs; any deterministic order would do.
    """

    degree: int

    @property
    def entries(self) -> tuple[Mono, ...]:
        return _mono_entries(self.degree)

    @property
    def index(self) -> dict[Mono, int]:
        return _mono_index(self.degree)

    def __len__(self) -> int:
        return len(self.entries)


@lru_cache(maxsize=None)
def _mono_entries(degree: int) -> tuple[Mono, ...]:
    if degree < 0:
        return ()
    return tuple(
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    )


@lru_cache(maxsize=None)
def _mono_index(degree: int) -> dict[Mono, int]:
    return {m: i for i, m in enumerate(_mono_entries(degree))}


def expand_power(form: Sequence, power: int) -> tuple:
    """Coefficients of (cx*x + cy*y + cz*z)^power over MonoBasis(power).

    The multinomial expansion is exact: integer coefficients stay integers,
    rational ones become Fractions.  A zero form or power 0 is rejected
    (a constant generator would make every ideal the unit ideal).
    """
    cx, cy, cz = form
    if cx == cy == cz == 0:
        raise ValueError("linear form must be nonzero")
    if power < 1:
        raise ValueError("power must be a positive integer")
    out = []
    for i, j, k in _mono_entries(power):
        c = comb(power, i) * comb(power - i, j) * cx**i * cy**j * cz**k
        out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class DenseMatrix:
    """Immutable dense matrix of exact scalars (ints or Fractions)."""

    rows: int
    cols: int
    entries: tuple[tuple, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "DenseMatrix":
        entries = tuple(tuple(r) for r in rows)
        nc = len(entries[0]) if entries else 0
        return cls(len(entries), nc, entries)


def _as_int_rows(m) -> tuple[list[list[int]], int]:
    """Matrix rows scaled to integers; returns (rows, ncols).

    Scaling a row by the lcm of its denominators changes neither rank nor
    kernel.
    """
    if isinstance(m, DenseMatrix):
        raw = m.entries
        ncols = m.cols
    else:
        raw = [tuple(r) for r in m]
        ncols = len(raw[0]) if raw else 0
    rows = []
    for r in raw:
        scale = 1
        for x in r:
            if isinstance(x, Fraction):
                d = x.denominator
                scale = scale * d // _gcd(scale, d)
        rows.append([int(x * scale) if isinstance(x, Fraction) else int(x) * scale
                     for x in r])
    return rows, ncols


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def rank(m) -> int:
    """Exact rank over the rationals of a DenseMatrix or rows-of-scalars."""
    rows, _ = _as_int_rows(m)
    return _impl.bareiss_rank(rows)


def kernel_basis(m) -> list[tuple[int, ...]]:
    """Basis of the right null space, as primitive integer vectors.

    len(result) == cols - rank(m) always; vectors are normalized to gcd 1
    with positive leading entry, in a deterministic order.
    """
    rows, ncols = _as_int_rows(m)
    return _pure.int_kernel(rows, ncols)


def rank_int_rows(rows: list[list[int]]) -> int:
    """Exact rank of integer rows.  Consumes (mutates) the rows."""
    return _impl.bareiss_rank(rows)


def kernel_int_rows(rows: list[list[int]], ncols: int) -> list[tuple[int, ...]]:
    """Right kernel of integer rows; see :func:`kernel_basis`."""
    return _pure.int_kernel(rows, ncols)


def rank_mod_p(a, p: int) -> int:
    """Rank over GF(p) of an int64 numpy array.  Clobbers ``a``.

    Only valid as a lower bound on the rational rank (reduction can only
    drop rank); the package uses it strictly for one-sided pre-screening.
    """
    return _impl.rank_mod_p(a, p)
