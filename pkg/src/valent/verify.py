"""Exact integer verification of the Laplacian eigenvector condition.

Everything here is plain integer arithmetic on plain integer vectors; no
floating point is involved anywhere.  The per-vertex condition used
throughout is

    (degree(i) - eigenvalue) * v[i] == sum of v over the neighbors of i

which is equivalent to (D - A) v = eigenvalue * v.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    EmptyVector,
    LengthMismatch,
    NotACertificate,
    VertexOutOfRange,
    ZeroVector,
)
from .graphs import Graph


def _require_length(g: Graph, values: Sequence[int]) -> None:
    if len(values) != g.n:
        raise LengthMismatch(f"vector of length {len(values)} for a graph on {g.n} vertices")


def apply_laplacian(g: Graph, values: Sequence[int]) -> tuple[int, ...]:
    """Multiply the graph Laplacian by an integer vector, exactly."""
    _require_length(g, values)
    out = []
    for i in range(g.n):
        s = 0
        for j in g.neighbors[i]:
            s += values[j]
        out.append(len(g.neighbors[i]) * values[i] - s)
    return tuple(out)


def verify_eigenpair(g: Graph, values: Sequence[int], eigenvalue: int) -> bool:
    """True iff the vector is a Laplacian eigenvector for the given
    integer eigenvalue, checked exactly at every vertex."""
    _require_length(g, values)
    if not any(values):
        raise ZeroVector("the all-zero vector is not an eigenvector candidate")
    for i in range(g.n):
        s = 0
        for j in g.neighbors[i]:
            s += values[j]
        if (len(g.neighbors[i]) - eigenvalue) * values[i] != s:
            return False
    return True


def infer_eigenvalue(g: Graph, values: Sequence[int]) -> int | None:
    """The unique integer eigenvalue afforded by the vector, or None.

    The candidate is solved from any vertex with a nonzero entry and then
    verified globally.
    """
    _require_length(g, values)
    pivot = next((i for i in range(g.n) if values[i]), None)
    if pivot is None:
        raise ZeroVector("cannot infer an eigenvalue for the all-zero vector")
    s = sum(values[j] for j in g.neighbors[pivot])
    num = len(g.neighbors[pivot]) * values[pivot] - s
    if num % values[pivot] != 0:
        return None
    lam = num // values[pivot]
    return lam if verify_eigenpair(g, values, lam) else None


class Valence(enum.Enum):
    MONOVALENT = "monovalent"
    BIVALENT = "bivalent"
    TRIVALENT = "trivalent"
    OTHER = "other"


def valence_of(values: Sequence[int]) -> Valence:
    """Classify a vector by the strictest matching entry alphabet.

    monovalent: all entries +1.  bivalent: entries within {-1, +1} with
    both present.  trivalent: entries within {-1, 0, +1} with a zero and
    at least one nonzero.  Everything else is OTHER.
    """
    if len(values) == 0:
        raise EmptyVector("cannot classify an empty vector")
    present = set(values)
    if present == {1}:
        return Valence.MONOVALENT
    if present == {-1, 1}:
        return Valence.BIVALENT
    if present <= {-1, 0, 1} and 0 in present and present != {0}:
        return Valence.TRIVALENT
    return Valence.OTHER


def soft_nodes(values: Sequence[int]) -> frozenset[int]:
    """Vertices where the vector vanishes."""
    if len(values) == 0:
        raise EmptyVector("empty vector has no soft set")
    return frozenset(i for i, v in enumerate(values) if v == 0)


def support(values: Sequence[int]) -> tuple[int, ...]:
    """Vertices with a nonzero entry, ascending."""
    return tuple(i for i, v in enumerate(values) if v != 0)


@dataclass(frozen=True)
class SoftProfile:
    """Neighborhood split of one vertex under a valuation: total degree,
    neighbors with nonzero value, neighbors with zero value."""

    degree: int
    nonzero_neighbors: int
    soft_neighbors: int


def soft_profile(g: Graph, values: Sequence[int], j: int) -> SoftProfile:
    _require_length(g, values)
    if not 0 <= j < g.n:
        raise VertexOutOfRange(f"vertex {j} outside 0..{g.n - 1}")
    nonzero = sum(1 for i in g.neighbors[j] if values[i] != 0)
    deg = len(g.neighbors[j])
    return SoftProfile(deg, nonzero, deg - nonzero)


@dataclass(frozen=True, order=True)
class Certificate:
    """A machine-checkable proof that a graph affords an integer
    eigenvalue: the eigenvector (sign-normalized so its first nonzero
    entry is +1) together with that eigenvalue."""

    eigenvalue: int
    values: tuple[int, ...]


def normalize_sign(values: Sequence[int]) -> tuple[int, ...]:
    """Flip the whole vector if its first nonzero entry is negative."""
    for v in values:
        if v > 0:
            return tuple(values)
        if v < 0:
            return tuple(-x for x in values)
    raise ZeroVector("cannot sign-normalize the all-zero vector")


def certify(g: Graph, values: Sequence[int], eigenvalue: int) -> Certificate:
    """Validate and package an eigenpair as a Certificate.

    Raises NotACertificate when the pair fails the exact per-vertex check
    or the sign normalization.
    """
    _require_length(g, values)
    if not any(values):
        raise ZeroVector("the all-zero vector cannot be certified")
    vals = tuple(values)
    if vals != normalize_sign(vals):
        raise NotACertificate("first nonzero entry must be +1")
    if not verify_eigenpair(g, vals, eigenvalue):
        raise NotACertificate(
            f"vector does not afford eigenvalue {eigenvalue} on this graph"
        )
    return Certificate(eigenvalue, vals)


# For any eigenvector with entries in {-1, 0, +1} the eigenvalue is an
# integer in [0, 2 * max degree]: at a vertex j with v[j] = +-1 the
# per-vertex condition gives eigenvalue = degree(j) - (neighbor sum)/v[j],
# and the neighbor sum is at most degree(j) in absolute value.  Laplacian
# eigenvalues are nonnegative, which gives the lower end.
def eigenvalue_upper_bound(g: Graph) -> int:
    return 2 * g.max_degree()
