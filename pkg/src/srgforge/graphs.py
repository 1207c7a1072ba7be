"""Simple undirected graphs as bitset adjacency rows, plus graph6 I/O.

Adjacency rows are Python ints used as bitsets: bit v of rows[u] is set iff
uv is an edge.  Common-neighbour counting, the hot loop of every verifier
here, is then a single AND plus popcount per pair.  Graphs are immutable
after construction and every constructor checks symmetry and loop-freeness.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .errors import ParseError


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits outside [0, n)")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def neighbours(self, u: int):
        return _bits(self.rows[u])

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self):
        for u in range(self.n):
            for v in _bits(self.rows[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def induced(self, vertices) -> "Graph":
        """Induced subgraph; new labels follow the order of `vertices`."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for i, u in enumerate(vs):
            for v in _bits(self.rows[u]):
                j = pos.get(v)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(vs), tuple(rows))

    def relabel(self, perm) -> "Graph":
        """Image under perm: old vertex u becomes perm[u]."""
        rows = [0] * self.n
        for u in range(self.n):
            for v in _bits(self.rows[u]):
                rows[perm[u]] |= 1 << perm[v]
        return Graph(self.n, tuple(rows))

    def digest(self) -> str:
        return hashlib.sha256(graph6_encode(self).encode()).hexdigest()[:16]


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint vertex classes covering [0, n)."""

    n: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = 0
        for cls in self.classes:
            for v in cls:
                if not 0 <= v < self.n:
                    raise ValueError(f"vertex {v} out of range")
                if seen >> v & 1:
                    raise ValueError(f"vertex {v} appears in two classes")
                seen |= 1 << v
        if seen != (1 << self.n) - 1:
            raise ValueError("classes do not cover the vertex set")

    @staticmethod
    def from_lists(n: int, classes) -> "VertexPartition":
        return VertexPartition(n, tuple(tuple(sorted(c)) for c in classes))

    def class_of(self) -> list[int]:
        out = [-1] * self.n
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out


@dataclass(frozen=True)
class Certificate:
    """Machine-readable verification record.

    passed is true exactly when the witness list is empty; witnesses hold
    the first counterexample found per failed check.
    """

    kind: str
    passed: bool
    parameters: dict = field(default_factory=dict)
    witnesses: tuple = ()
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (len(self.witnesses) == 0):
            raise ValueError("passed flag inconsistent with witnesses")

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "passed": self.passed,
                "parameters": self.parameters,
                "witnesses": list(self.witnesses),
                "provenance": self.provenance,
            },
            sort_keys=True,
        )


def certificate(kind, parameters=None, witnesses=(), provenance=None) -> Certificate:
    return Certificate(
        kind=kind,
        passed=not witnesses,
        parameters=dict(parameters or {}),
        witnesses=tuple(witnesses),
        provenance=dict(provenance or {}),
    )


# ---------------------------------------------------------------------------
# elementary operations


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row) & ~(1 << u) for u, row in enumerate(g.rows)))


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g in lexicographic endpoint order; adjacency
    is sharing an endpoint."""
    es = sorted(g.edges())
    rows = [0] * len(es)
    for i, (a, b) in enumerate(es):
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if a == c or a == d or b == c or b == d:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(len(es), tuple(rows))


def common_neighbours(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("common_neighbours needs two distinct vertices")
    return (g.rows[u] & g.rows[v]).bit_count()


# ---------------------------------------------------------------------------
# named small graphs used throughout the test corpus and constructions


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return complement(empty_graph(n))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(*part_sizes: int) -> Graph:
    n = sum(part_sizes)
    part = []
    for i, s in enumerate(part_sizes):
        part.extend([i] * s)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if part[u] != part[v]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def octahedron() -> Graph:
    return complete_multipartite(2, 2, 2)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


# ---------------------------------------------------------------------------
# graph6: printable encoding by upper-triangle bits in column-major order


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError("graph6 supports at most 258047 vertices here")


def upper_triangle_bits(g: Graph):
    """Bits x(i, j) for j = 1..n-1, i < j: the graph6 body order."""
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            yield col >> i & 1


def graph6_encode(g: Graph) -> str:
    out = bytearray(_g6_size_bytes(g.n))
    acc = 0
    nbits = 0
    for bit in upper_triangle_bits(g):
        acc = acc << 1 | bit
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ParseError("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError(f"graph6 byte out of range in {s!r}") from None
    if any(b < 63 or b > 126 for b in data):
        raise ParseError(f"graph6 byte out of range in {s!r}")

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ParseError("graph6 very long form (>258047 vertices) unsupported")
        if len(data) < 4:
            raise ParseError("truncated graph6 long-form size")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]

    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body length {len(body)} wrong for n={n}")

    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> k & 1) for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("graph6 padding bits are not zero")

    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))
