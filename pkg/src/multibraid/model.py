"""Core combinatorial types: multiplicities on K4, signed graphs, results.

The braid arrangement in question is encoded on the complete graph K4:
vertices 0..3, six edges in lexicographic order
(01, 02, 03, 12, 13, 23), classically aliased (a, b, c, d, e, f).  Edge ij
carries the hyperplane x_i = x_j; in essential coordinates the six defining
forms are x, y, z, x-y, x-z, y-z.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

Edge = tuple[int, int]
Triangle = tuple[int, int, int]

EDGES: tuple[Edge, ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
TRIANGLES: tuple[Triangle, ...] = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
EDGE_INDEX: dict[Edge, int] = {e: i for i, e in enumerate(EDGES)}

#: Defining linear forms per edge, coefficients over (x, y, z).
FORMS: tuple[tuple[int, int, int], ...] = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1),
)

#: Positions of each opposite-edge pair (01|23, 02|13, 03|12).
OPPOSITE_PAIRS: tuple[tuple[int, int], ...] = ((0, 5), (1, 4), (2, 3))


class ZeroMultiplicityError(ValueError):
    """Raised when a classification entry point receives a zero entry."""


def edge_index(i: int, j: int) -> int:
    return EDGE_INDEX[(i, j) if i < j else (j, i)]


def opposite_edge(e: Edge) -> Edge:
    """The unique edge of K4 disjoint from e (an involution, no fixed points)."""
    i, j = e
    k, l = (v for v in range(4) if v not in (i, j))
    return (k, l)


def triangle_edges(t: Triangle) -> tuple[Edge, Edge, Edge]:
    """The three 2-subsets of a triangle, in lexicographic order."""
    i, j, k = sorted(t)
    return ((i, j), (i, k), (j, k))


def triangle_edge_positions(t: Triangle) -> tuple[int, int, int]:
    return tuple(EDGE_INDEX[e] for e in triangle_edges(t))  # type: ignore[return-value]


MultiplicityLike = Union["Multiplicity", Iterable[int]]


@dataclass(frozen=True)
class Multiplicity:
    """Six nonnegative integers on the edges of K4, lexicographic order.

    values = (m01, m02, m03, m12, m13, m23) = (a, b, c, d, e, f).
    Zero entries are representable but rejected by classification entry
    points, which assume actual hyperplanes.
    """

    values: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        v = tuple(int(x) for x in self.values)
        if len(v) != 6:
            raise ValueError("a multiplicity has exactly six entries")
        if any(x < 0 for x in v):
            raise ValueError("multiplicity entries must be nonnegative")
        object.__setattr__(self, "values", v)

    @classmethod
    def of(cls, m: MultiplicityLike) -> "Multiplicity":
        if isinstance(m, Multiplicity):
            return m
        return cls(tuple(m))  # type: ignore[arg-type]

    @classmethod
    def parse(cls, text: str) -> "Multiplicity":
        parts = [p for p in text.replace(",", " ").split() if p]
        return cls(tuple(int(p) for p in parts))  # type: ignore[arg-type]

    # single-letter aliases used throughout the literature
    @property
    def a(self) -> int: return self.values[0]
    @property
    def b(self) -> int: return self.values[1]
    @property
    def c(self) -> int: return self.values[2]
    @property
    def d(self) -> int: return self.values[3]
    @property
    def e(self) -> int: return self.values[4]
    @property
    def f(self) -> int: return self.values[5]

    @property
    def total(self) -> int:
        """|m|, the sum of all six entries."""
        return sum(self.values)

    def edge(self, i: int, j: int) -> int:
        return self.values[edge_index(i, j)]

    def triangle_sum(self, t: Triangle) -> int:
        return sum(self.values[p] for p in triangle_edge_positions(t))

    def require_positive(self) -> None:
        if min(self.values) < 1:
            raise ZeroMultiplicityError("multiplicities must be >= 1")

    def relabel(self, perm: tuple[int, int, int, int]) -> "Multiplicity":
        """Push the multiplicity through a vertex permutation.

        The result assigns the old value of edge {i, j} to edge
        {perm[i], perm[j]}.
        """
        if sorted(perm) != [0, 1, 2, 3]:
            raise ValueError("perm must be a permutation of 0..3")
        out = [0] * 6
        for pos, (i, j) in enumerate(EDGES):
            out[edge_index(perm[i], perm[j])] = self.values[pos]
        return Multiplicity(tuple(out))  # type: ignore[arg-type]

    def to_json(self) -> list[int]:
        return list(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, pos: int) -> int:
        return self.values[pos]

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


def as_values(m: MultiplicityLike) -> tuple[int, ...]:
    """Coerce to the raw 6-tuple used by the numeric internals."""
    if isinstance(m, Multiplicity):
        return m.values
    t = tuple(int(x) for x in m)
    if len(t) != 6:
        raise ValueError("a multiplicity has exactly six entries")
    return t


@dataclass(frozen=True)
class SignedGraph4:
    """A {+, -, absent} labelling of the edges of K4.

    signs[p] is +1, -1 or 0 for the edge at position p; the +1 edges and
    -1 edges are the two (disjoint) sign classes.
    """

    signs: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        s = tuple(int(x) for x in self.signs)
        if len(s) != 6 or any(x not in (-1, 0, 1) for x in s):
            raise ValueError("signs must be six values in {-1, 0, +1}")
        object.__setattr__(self, "signs", s)

    @classmethod
    def empty(cls) -> "SignedGraph4":
        return cls((0,) * 6)

    def sign(self, i: int, j: int) -> int:
        return self.signs[edge_index(i, j)]

    @property
    def plus_edges(self) -> tuple[Edge, ...]:
        return tuple(e for p, e in enumerate(EDGES) if self.signs[p] == 1)

    @property
    def minus_edges(self) -> tuple[Edge, ...]:
        return tuple(e for p, e in enumerate(EDGES) if self.signs[p] == -1)


@dataclass(frozen=True)
class AnnDecomposition:
    """A presentation m_ij = 2k + n_i + n_j + sign(ij).

    k and the vertex weights n_i are nonnegative integers; the signed graph
    contributes -1, 0 or +1 per edge.  N = 4k + n0 + n1 + n2 + n3 is the
    degree shift appearing in the exponent formula.
    """

    k: int
    n: tuple[int, int, int, int]
    graph: SignedGraph4

    def __post_init__(self):
        if self.k < 0 or any(x < 0 for x in self.n):
            raise ValueError("k and vertex weights must be nonnegative")

    @property
    def N(self) -> int:
        return 4 * self.k + sum(self.n)

    def multiplicity(self) -> Multiplicity:
        vals = tuple(
            2 * self.k + self.n[i] + self.n[j] + self.graph.signs[p]
            for p, (i, j) in enumerate(EDGES)
        )
        return Multiplicity(vals)  # type: ignore[arg-type]


# --- classification results -------------------------------------------------

@dataclass(frozen=True)
class FreeVertexWitness:
    vertex: int


@dataclass(frozen=True)
class AnnWitness:
    decomposition: AnnDecomposition
    ordering: tuple[int, int, int, int]  # elimination values per vertex


@dataclass(frozen=True)
class GeneralNonFree:
    """One of the six residue/parity non-freeness cases (1..6)."""
    case: int


@dataclass(frozen=True)
class LbPositive:
    """A degree where the closed-form syzygy-gap lower bound is positive."""
    degree: int
    value: int


@dataclass(frozen=True)
class NoFreeStructure:
    """Non-free by the classification alone: no free vertex and no free
    additive presentation exists."""


@dataclass(frozen=True)
class OracleGap:
    """Exact Hilbert-function gap between global and local syzygies."""
    degree: int
    gap: int


Witness = Union[FreeVertexWitness, AnnWitness]
Certificate = Union[GeneralNonFree, LbPositive, NoFreeStructure, OracleGap]


@dataclass(frozen=True)
class ClassificationResult:
    multiplicity: Multiplicity
    free: bool
    witness: Optional[Witness] = None
    exponents: Optional[tuple[int, int, int, int]] = None
    certificate: Optional[Certificate] = None

    def __post_init__(self):
        if self.free and self.exponents is not None:
            if sum(self.exponents) != self.multiplicity.total:
                raise ValueError("exponents must sum to |m|")
        if not self.free and self.certificate is None:
            raise ValueError("a non-free result needs a certificate")

    @property
    def verdict(self) -> str:
        return "free" if self.free else "non-free"

    def to_json(self) -> dict:
        return {
            "multiplicity": self.multiplicity.to_json(),
            "verdict": self.verdict,
            "witness": _witness_to_json(self.witness),
            "exponents": list(self.exponents) if self.exponents else None,
            "certificate": _certificate_to_json(self.certificate),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClassificationResult":
        return cls(
            multiplicity=Multiplicity.of(data["multiplicity"]),
            free=data["verdict"] == "free",
            witness=_witness_from_json(data.get("witness")),
            exponents=tuple(data["exponents"]) if data.get("exponents") else None,
            certificate=_certificate_from_json(data.get("certificate")),
        )


def _witness_to_json(w: Optional[Witness]):
    if w is None:
        return None
    if isinstance(w, FreeVertexWitness):
        return {"kind": "free_vertex", "vertex": w.vertex}
    return {
        "kind": "ann",
        "k": w.decomposition.k,
        "n": list(w.decomposition.n),
        "signs": list(w.decomposition.graph.signs),
        "ordering": list(w.ordering),
    }


def _witness_from_json(data):
    if data is None:
        return None
    if data["kind"] == "free_vertex":
        return FreeVertexWitness(data["vertex"])
    dec = AnnDecomposition(data["k"], tuple(data["n"]), SignedGraph4(tuple(data["signs"])))
    return AnnWitness(dec, tuple(data["ordering"]))


def _certificate_to_json(c: Optional[Certificate]):
    if c is None:
        return None
    if isinstance(c, GeneralNonFree):
        return {"kind": "general_non_free", "case": c.case}
    if isinstance(c, LbPositive):
        return {"kind": "lb_positive", "degree": c.degree, "value": c.value}
    if isinstance(c, NoFreeStructure):
        return {"kind": "no_free_structure"}
    return {"kind": "oracle_gap", "degree": c.degree, "gap": c.gap}


def _certificate_from_json(data):
    if data is None:
        return None
    kind = data["kind"]
    if kind == "general_non_free":
        return GeneralNonFree(data["case"])
    if kind == "lb_positive":
        return LbPositive(data["degree"], data["value"])
    if kind == "no_free_structure":
        return NoFreeStructure()
    if kind == "oracle_gap":
        return OracleGap(data["degree"], data["gap"])
    raise ValueError(f"unknown certificate kind {kind!r}")


def all_permutations() -> tuple[tuple[int, int, int, int], ...]:
    from itertools import permutations

    return tuple(permutations(range(4)))
