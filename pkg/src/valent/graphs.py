"""Immutable simple undirected graphs with graph6 and DOT input/output.

Vertices are dense integer ids 0..n-1.  Adjacency is stored as sorted
neighbor tuples plus a per-vertex bitmask so adjacency tests are O(1)
regardless of n (Python ints are arbitrary precision).  Graphs are never
mutated; every transformation builds a new one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    InvalidSize,
    LengthMismatch,
    LoopEdge,
    MalformedGraph6,
    UnsupportedSize,
    VertexOutOfRange,
)

# Largest vertex count the graph6 codec handles (the 4-byte size header).
GRAPH6_MAX_N = 258047

_G6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""

    n: int
    neighbors: tuple[tuple[int, ...], ...]
    _bits: tuple[int, ...] = field(repr=False, compare=False, default=())

    def degree(self, i: int) -> int:
        return len(self.neighbors[i])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def max_degree(self) -> int:
        return max((len(a) for a in self.neighbors), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.neighbors), default=0)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self._bits[i] >> j) & 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (i, j) pairs with i < j, sorted."""
        return tuple((i, j) for i in range(self.n) for j in self.neighbors[i] if i < j)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.neighbors) // 2


def _check_vertex(i: int, n: int) -> None:
    if not 0 <= i < n:
        raise VertexOutOfRange(f"vertex {i} outside 0..{n - 1}")


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from a vertex count and an edge list.

    Loops, out-of-range endpoints and duplicate pairs (in either
    orientation) are rejected.
    """
    if n < 0:
        raise InvalidSize(f"negative vertex count {n}")
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        _check_vertex(i, n)
        _check_vertex(j, n)
        if i == j:
            raise LoopEdge(f"loop at vertex {i}")
        if j in adjacency[i]:
            raise DuplicateEdge(f"duplicate edge ({i}, {j})")
        adjacency[i].add(j)
        adjacency[j].add(i)
    neighbors = tuple(tuple(sorted(a)) for a in adjacency)
    bits = tuple(sum(1 << j for j in a) for a in neighbors)
    return Graph(n, neighbors, bits)


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSize(f"path needs n >= 1, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSize(f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidSize(f"complete_bipartite needs a, b >= 1, got ({a}, {b})")
    return new_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def is_connected(g: Graph) -> bool:
    """True iff the graph has exactly one connected component."""
    if g.n == 0:
        raise InvalidSize("connectivity undefined for the empty graph")
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.neighbors[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.n


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the connected components, each sorted, in order of
    smallest member."""
    seen = [False] * g.n
    components = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            u = stack.pop()
            for v in g.neighbors[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        components.append(tuple(sorted(comp)))
    return tuple(components)


# graph6 codec
#
# A graph6 line is N(n) followed by R(x):
#   N(n): n <= 62           -> one char chr(n + 63)
#         63 <= n <= 258047 -> '~' then 3 chars, 18 bits big-endian
#   R(x): the upper adjacency triangle read column by column, i.e. bits
#         for pairs (0,1), (0,2), (1,2), (0,3), ... zero-padded to a
#         multiple of 6; each 6-bit group b is written as chr(b + 63).
# All payload characters lie in 63..126.


def _parse_size(data: str) -> tuple[int, int]:
    """Return (n, chars consumed) from the size header of a graph6 line."""
    c0 = ord(data[0]) - 63
    if c0 < 0 or c0 > 63:
        raise MalformedGraph6(0, f"character {data[0]!r} outside graph6 range")
    if c0 < 63:
        return c0, 1
    # '~' prefix: long form
    if len(data) >= 2 and data[1] == "~":
        raise MalformedGraph6(1, "8-byte size header exceeds the supported bound")
    if len(data) < 4:
        raise MalformedGraph6(1, "truncated 4-byte size header")
    n = 0
    for k in range(1, 4):
        c = ord(data[k]) - 63
        if c < 0 or c > 63:
            raise MalformedGraph6(k, f"character {data[k]!r} outside graph6 range")
        n = (n << 6) | c
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts an optional '>>graph6<<' prefix and a trailing newline;
    anything else that deviates from the format raises MalformedGraph6.
    """
    data = text.rstrip("\r\n")
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise MalformedGraph6(0, "empty input")
    n, offset = _parse_size(data)
    if n > GRAPH6_MAX_N:
        raise UnsupportedSize(f"n = {n} exceeds supported bound {GRAPH6_MAX_N}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = data[offset:]
    if len(body) != nchars:
        raise MalformedGraph6(
            offset + min(len(body), nchars),
            f"expected {nchars} adjacency characters, got {len(body)}",
        )
    edges = []
    bitpos = 0
    i, j = 0, 1  # current pair, column-by-column
    for k, ch in enumerate(body):
        group = ord(ch) - 63
        if group < 0 or group > 63:
            raise MalformedGraph6(offset + k, f"character {ch!r} outside graph6 range")
        for b in range(5, -1, -1):
            if bitpos >= nbits:
                if (group >> b) & 1:
                    raise MalformedGraph6(offset + k, "nonzero padding bits")
                continue
            if (group >> b) & 1:
                edges.append((i, j))
            bitpos += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return new_graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (no header, no trailing newline)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise UnsupportedSize(f"n = {n} exceeds supported bound {GRAPH6_MAX_N}")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr(((n >> 12) & 63) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    group = 0
    filled = 0
    bits = g._bits
    for j in range(1, n):
        col = bits[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


# DOT output
#
# Fixed styling for valued vertices: +1 -> salmon, -1 -> lightblue,
# 0 -> lightgray; labels are "+1", "-1" and "0".

_DOT_FILL = {1: "salmon", -1: "lightblue", 0: "lightgray"}
_DOT_LABEL = {1: "+1", -1: "-1", 0: "0"}


def to_dot(g: Graph, valuation: Sequence[int] | None = None) -> str:
    """Render the graph as DOT source, optionally styled by a valuation."""
    if valuation is not None and len(valuation) != g.n:
        raise LengthMismatch(
            f"valuation has {len(valuation)} entries for a graph on {g.n} vertices"
        )
    lines = ["graph G {"]
    if valuation is not None:
        lines.append("  node [style=filled];")
        for i in range(g.n):
            v = valuation[i]
            label = _DOT_LABEL.get(v, str(v))
            fill = _DOT_FILL.get(v, "white")
            lines.append(f'  {i} [label="{label}", fillcolor="{fill}"];')
    else:
        for i in range(g.n):
            lines.append(f"  {i};")
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
