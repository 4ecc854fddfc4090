"""Weighted oriented simplicial complexes.

A complex stores, per dimension, a lexicographically sorted list of simplices
together with strictly positive weights. Every simplex is kept in canonical
orientation (strictly ascending vertex list); the position of a simplex in its
per-dimension list is the row/column index used by all matrix operations.
Complexes are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
import scipy.sparse as sp

from .errors import (
    DimensionOutOfRange,
    DuplicateSimplex,
    EmptyInput,
    InvalidSimplex,
    NonPositiveWeight,
    ParseError,
)

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "build_complex",
    "skeleton",
    "incidence_matrix",
    "load_complex",
    "save_complex",
]


@dataclass(frozen=True)
class Simplex:
    """An oriented simplex in canonical (ascending) vertex order."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) == 0:
            raise InvalidSimplex("simplex needs at least one vertex")
        if any(v < 0 for v in self.vertices):
            raise InvalidSimplex(f"negative vertex label in {self.vertices}")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidSimplex(f"repeated vertex in {self.vertices}")
        # canonical orientation: any input ordering is sorted ascending
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def faces(self):
        """All facets (one dimension down), ascending order preserved."""
        if self.dimension == 0:
            return []
        return [
            Simplex(self.vertices[:j] + self.vertices[j + 1:])
            for j in range(len(self.vertices))
        ]

    def __lt__(self, other: "Simplex") -> bool:
        return self.vertices < other.vertices

    def __repr__(self):
        return f"Simplex{self.vertices}"


class SimplicialComplex:
    """Finite weighted complex, closed under taking faces.

    Use :func:`build_complex` or :func:`load_complex` instead of calling the
    constructor directly; both complete the face closure and validate weights.
    """

    def __init__(self, weights: dict[Simplex, float]):
        if not weights:
            raise EmptyInput("complex needs at least one simplex")
        by_dim: dict[int, list[Simplex]] = {}
        for s in weights:
            by_dim.setdefault(s.dimension, []).append(s)
        self._dim = max(by_dim)
        for d in range(self._dim + 1):
            if d not in by_dim:
                raise InvalidSimplex(f"no simplices at dimension {d}")
            by_dim[d].sort()
        self._simplices = {d: tuple(by_dim[d]) for d in range(self._dim + 1)}
        self._weights = dict(weights)
        self._index = {
            s: i for d in self._simplices for i, s in enumerate(self._simplices[d])
        }
        # dense reindexing for possibly non-contiguous vertex labels
        self._vertex_index = {
            s.vertices[0]: i for i, s in enumerate(self._simplices[0])
        }
        self._check_closure()

    def _check_closure(self):
        for d in range(1, self._dim + 1):
            for s in self._simplices[d]:
                for f in s.faces():
                    if f not in self._weights:
                        raise InvalidSimplex(f"closure violated: {f} missing")

    @property
    def dim(self) -> int:
        return self._dim

    def n(self, p: int) -> int:
        """Number of p-simplices."""
        return len(self._simplices.get(p, ()))

    def simplices(self, p: int) -> tuple[Simplex, ...]:
        """The p-simplices in lexicographic order (fixes matrix indices)."""
        if p < 0 or p > self._dim:
            raise DimensionOutOfRange(f"dimension {p} not in [0, {self._dim}]")
        return self._simplices[p]

    def weight(self, s: Simplex) -> float:
        return self._weights[s]

    def weights(self, p: int) -> np.ndarray:
        """Weight vector over the p-simplices, in index order."""
        return np.array([self._weights[s] for s in self.simplices(p)])

    def index(self, s: Simplex) -> int:
        """Position of a simplex within its dimension's ordering."""
        return self._index[s]

    def vertex_index(self, label: int) -> int:
        return self._vertex_index[label]

    def __contains__(self, s: Simplex) -> bool:
        return s in self._weights

    def items(self):
        """(simplex, weight) pairs, dimension-ascending then lexicographic."""
        for d in range(self._dim + 1):
            for s in self._simplices[d]:
                yield s, self._weights[s]

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._weights == other._weights

    def __repr__(self):
        counts = ", ".join(f"n_{d}={self.n(d)}" for d in range(self._dim + 1))
        return f"SimplicialComplex(dim={self._dim}, {counts})"


def build_complex(simplices) -> SimplicialComplex:
    """Build a complex from (vertex-list, weight) pairs.

    Faces that are not given explicitly are added with default weight 1.0 so
    the result is always closed. Listing the same simplex twice is an error,
    as are non-positive weights.
    """
    entries = list(simplices)
    if not entries:
        raise EmptyInput("no simplices given")
    weights: dict[Simplex, float] = {}
    explicit: set[Simplex] = set()
    for vertices, w in entries:
        s = Simplex(tuple(vertices))
        if s in explicit:
            raise DuplicateSimplex(f"{s} listed twice")
        if not w > 0:
            raise NonPositiveWeight(f"weight {w} for {s}")
        explicit.add(s)
        weights[s] = float(w)
    # complete the closure, breadth-first down the dimensions
    frontier = list(weights)
    while frontier:
        nxt = []
        for s in frontier:
            for f in s.faces():
                if f not in weights:
                    weights[f] = 1.0
                    nxt.append(f)
        frontier = nxt
    return SimplicialComplex(weights)


def skeleton(K: SimplicialComplex, p: int) -> SimplicialComplex:
    """Subcomplex of all simplices of dimension <= p, weights preserved."""
    if p < 0 or p > K.dim:
        raise DimensionOutOfRange(f"skeleton dimension {p} not in [0, {K.dim}]")
    weights = {s: w for s, w in K.items() if s.dimension <= p}
    return SimplicialComplex(weights)


def incidence_matrix(K: SimplicialComplex, p: int) -> sp.csr_matrix:
    """Signed incidence matrix between (p+1)- and p-simplices.

    Row i corresponds to the i-th (p+1)-simplex, column j to the j-th
    p-simplex. The face obtained by deleting the vertex at position j of the
    ascending vertex list carries sign (-1)**j. Entries are integers so that
    products of consecutive incidence matrices vanish exactly.
    """
    if p < 0 or p >= K.dim:
        raise DimensionOutOfRange(f"incidence dimension {p} not in [0, {K.dim})")
    rows, cols, vals = [], [], []
    for i, s in enumerate(K.simplices(p + 1)):
        sign = 1
        for f in s.faces():
            rows.append(i)
            cols.append(K.index(f))
            vals.append(sign)
            sign = -sign
    return sp.csr_matrix(
        (np.array(vals, dtype=np.int64), (rows, cols)),
        shape=(K.n(p + 1), K.n(p)),
    )


def save_complex(K: SimplicialComplex, path) -> None:
    """Write one simplex per line: ``v0 v1 ... vk weight``.

    Lines are emitted dimension-ascending and lexicographic within each
    dimension; weights carry 17 significant digits so a round trip restores
    every float64 exactly.
    """
    with open(path, "w") as fh:
        for s, w in K.items():
            fh.write(" ".join(str(v) for v in s.vertices) + f" {w:.17g}\n")


def load_complex(path) -> SimplicialComplex:
    """Read the plain-text complex format written by :func:`save_complex`.

    Simplices may appear in any order; ``#`` starts a comment; missing faces
    are completed with weight 1.0 on load.
    """
    entries = []
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) < 2:
                raise ParseError(line_no, f"expected 'v0 ... vk weight', got {raw!r}")
            try:
                vertices = [int(t) for t in tokens[:-1]]
            except ValueError:
                raise ParseError(line_no, f"bad vertex label in {raw!r}") from None
            try:
                w = float(tokens[-1])
            except ValueError:
                raise ParseError(line_no, f"bad weight in {raw!r}") from None
            if not w > 0:
                raise NonPositiveWeight(f"line {line_no}: weight {w}")
            if len(set(vertices)) != len(vertices):
                raise ParseError(line_no, f"repeated vertex in {raw!r}")
            if any(v < 0 for v in vertices):
                raise ParseError(line_no, f"negative vertex label in {raw!r}")
            entries.append((vertices, w))
    return build_complex(entries)


def complete_complex(n: int, dim: int) -> SimplicialComplex:
    """All simplices up to ``dim`` on vertices 0..n-1, unit weights."""
    if n < 1 or dim < 0 or dim >= n:
        raise DimensionOutOfRange(f"no {dim}-complex on {n} vertices")
    entries = [(list(c), 1.0) for c in combinations(range(n), dim + 1)]
    return build_complex(entries)
