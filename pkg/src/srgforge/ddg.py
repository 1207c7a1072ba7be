"""Divisible design graphs glued from resolvable designs.

The construction takes m resolvable designs with matching shape (each with m
parallel classes of q blocks), a left quasigroup on [0, m) and a family of
block bijections.  Vertices are the disjoint union of the m point sets.  For
x in part i and y in part j, the quasigroup picks one parallel class on each
side (class i*j in design i, class j*i in design j), the bijection sigma_ij
matches up their blocks, and x ~ y exactly when y's block is NOT the image
of x's block.  Every part induces a complete multipartite graph and the
whole graph is a divisible design graph: common-neighbour counts depend only
on whether a vertex pair shares a part.

The verifier checks that property exhaustively and infers the parameters, so
it doubles as a recognizer for graphs from outside this package.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import NotAClique, NotRegularClique, ParseError, ShapeError, ShapeMismatch
from .gf import as_prime_power
from .graphs import Certificate, Graph, VertexPartition, certificate, complement


def _invert(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for x, y in enumerate(perm):
        inv[y] = x
    return tuple(inv)


@dataclass(frozen=True)
class LeftQuasigroup:
    """Binary operation on [0, m) whose left translations are bijections."""

    m: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.table) != self.m:
            raise ValueError(f"need {self.m} rows, got {len(self.table)}")
        ref = list(range(self.m))
        for i, row in enumerate(self.table):
            if sorted(row) != ref:
                raise ValueError(f"row {i} is not a permutation of [0, {self.m})")

    def op(self, i: int, h: int) -> int:
        return self.table[i][h]


@dataclass(frozen=True)
class BijectionFamily:
    """Permutations sigma[i][j] of [0, q) matching blocks of part i to part j.

    sigma[i][i] is the identity and sigma[j][i] is the inverse of
    sigma[i][j]; together these make the adjacency rule symmetric.
    """

    m: int
    q: int
    sigma: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if len(self.sigma) != self.m or any(len(r) != self.m for r in self.sigma):
            raise ValueError(f"sigma must be {self.m}x{self.m}")
        ref = list(range(self.q))
        for i in range(self.m):
            for j in range(self.m):
                if sorted(self.sigma[i][j]) != ref:
                    raise ValueError(
                        f"sigma[{i}][{j}] is not a permutation of [0, {self.q})")
        ident = tuple(range(self.q))
        for i in range(self.m):
            if self.sigma[i][i] != ident:
                raise ValueError(f"sigma[{i}][{i}] must be the identity")
            for j in range(i + 1, self.m):
                if self.sigma[j][i] != _invert(self.sigma[i][j]):
                    raise ValueError(
                        f"sigma[{j}][{i}] is not the inverse of sigma[{i}][{j}]")


@dataclass(frozen=True)
class DdgParams:
    """(v, k, lambda1, lambda2, m, n) with v = m * n."""

    v: int
    k: int
    lambda1: int
    lambda2: int
    m: int
    n: int

    def __post_init__(self):
        if self.v != self.m * self.n:
            raise ValueError(f"v = {self.v} but m*n = {self.m * self.n}")

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.v, self.k, self.lambda1, self.lambda2, self.m, self.n)

    @classmethod
    def from_certificate(cls, cert: Certificate) -> "DdgParams":
        p = cert.parameters
        return cls(p["v"], p["k"], p["lambda1"], p["lambda2"], p["m"], p["n"])


def theorem1_params(q: int, d: int) -> DdgParams:
    """Parameters of the glued graph on prime power q and dimension d >= 2."""
    as_prime_power(q)
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    m = (q**d - 1) // (q - 1)
    return DdgParams(
        v=q**d * m,
        k=q ** (d - 1) * (q**d - 1),
        lambda1=q ** (d - 1) * (q**d - q ** (d - 1) - 1),
        lambda2=q ** (d - 2) * (q - 1) * (q**d - 1),
        m=m,
        n=q**d,
    )


def cyclic_quasigroup(m: int) -> LeftQuasigroup:
    """table[i][h] = (i + h) mod m; the rotation group row by row."""
    if m < 1:
        raise ValueError("order must be >= 1")
    return LeftQuasigroup(
        m, tuple(tuple((i + h) % m for h in range(m)) for i in range(m)))


def random_left_quasigroup(m: int, seed: int) -> LeftQuasigroup:
    """Each row an independent uniform permutation; reproducible from seed."""
    if m < 1:
        raise ValueError("order must be >= 1")
    rng = random.Random(seed)
    rows = []
    for _ in range(m):
        row = list(range(m))
        rng.shuffle(row)
        rows.append(tuple(row))
    return LeftQuasigroup(m, tuple(rows))


def identity_family(m: int, q: int) -> BijectionFamily:
    ident = tuple(range(q))
    return BijectionFamily(m, q, tuple(tuple(ident for _ in range(m))
                                       for _ in range(m)))


def random_bijection_family(m: int, q: int, quasigroup: LeftQuasigroup,
                            seed: int) -> BijectionFamily:
    """Uniform sigma[i][j] for each i < j, inverses below the diagonal."""
    if quasigroup.m != m:
        raise ShapeMismatch(f"quasigroup order {quasigroup.m} != {m}")
    rng = random.Random(seed)
    sigma = [[tuple(range(q))] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            perm = list(range(q))
            rng.shuffle(perm)
            sigma[i][j] = tuple(perm)
            sigma[j][i] = _invert(tuple(perm))
    return BijectionFamily(m, q, tuple(tuple(row) for row in sigma))


def construct_ddg(designs, quasigroup: LeftQuasigroup,
                  family: BijectionFamily) -> tuple[Graph, VertexPartition]:
    """Build the glued graph; parts appear in design order.

    Vertex i*P + t is point t of design i, P the common point count.  The
    returned partition lists the m parts in that order.
    """
    m = len(designs)
    if m == 0:
        raise ShapeMismatch("need at least one design")
    if quasigroup.m != m or family.m != m:
        raise ShapeMismatch(
            f"{m} designs but quasigroup order {quasigroup.m}, "
            f"family order {family.m}")
    P = designs[0].n_points
    q = designs[0].blocks_per_class
    for i, dz in enumerate(designs):
        if dz.n_points != P or dz.n_classes != m or dz.blocks_per_class != q:
            raise ShapeMismatch(
                f"design {i} has shape ({dz.n_points} points, "
                f"{dz.n_classes} classes, {dz.blocks_per_class} blocks); "
                f"expected ({P}, {m}, {q})")
    if family.q != q:
        raise ShapeMismatch(f"family block count {family.q} != {q}")

    tables = [dz.block_index_table() for dz in designs]
    # block_masks[j][c][b]: bitmask of block b of class c of design j,
    # shifted to part j's global index range
    block_masks = []
    for j, dz in enumerate(designs):
        off = j * P
        block_masks.append([
            [sum(1 << (off + p) for p in block) for block in cls]
            for cls in dz.classes
        ])
    part_masks = [((1 << P) - 1) << (j * P) for j in range(m)]

    rows = [0] * (m * P)
    for i in range(m):
        for j in range(m):
            c_ij = quasigroup.op(i, j)
            c_ji = quasigroup.op(j, i)
            sig = family.sigma[i][j]
            col = tables[i][c_ij]
            forbidden = block_masks[j][c_ji]
            for t in range(P):
                # everything in part j except the matched block; for i = j
                # that block contains x itself, so no loop appears
                rows[i * P + t] |= part_masks[j] ^ forbidden[sig[col[t]]]

    g = Graph(m * P, tuple(rows))
    partition = VertexPartition.from_lists(
        m * P, [range(j * P, (j + 1) * P) for j in range(m)])
    return g, partition


def verify_ddg(g: Graph, partition: VertexPartition) -> Certificate:
    """Exhaustive divisible-design check with inferred parameters.

    Requires equal class sizes and regularity, then demands a constant
    common-neighbour count lambda1 over same-class pairs and lambda2 over
    cross-class pairs, both inferred from the first pair of each kind.
    Complete and edgeless graphs are flagged as excluded, not passed.
    """
    n_v = g.n
    if partition.n != n_v:
        return certificate("ddg", parameters={"v": n_v}, witnesses=[
            {"check": "partition-shape", "partition_n": partition.n}])

    ecount = g.edge_count()
    if n_v > 1 and ecount in (0, n_v * (n_v - 1) // 2):
        reason = "edgeless" if ecount == 0 else "complete"
        return certificate("ddg", parameters={"v": n_v}, witnesses=[
            {"check": "excluded", "reason": reason}])

    witnesses = []
    sizes = sorted({len(c) for c in partition.classes})
    if len(sizes) != 1:
        witnesses.append({"check": "class-size", "sizes": sizes})

    k = g.degree(0) if n_v else 0
    for u in range(n_v):
        if g.degree(u) != k:
            witnesses.append({"check": "regular", "vertices": [0, u],
                              "degrees": [k, g.degree(u)]})
            break

    lam1 = lam2 = None
    if not witnesses:
        cls_of = partition.class_of()
        for u in range(n_v):
            row_u = g.rows[u]
            cu = cls_of[u]
            for w in range(u + 1, n_v):
                c = (row_u & g.rows[w]).bit_count()
                if cls_of[w] == cu:
                    if lam1 is None:
                        lam1 = c
                    elif c != lam1:
                        witnesses.append({"check": "same-class", "pair": [u, w],
                                          "count": c, "expected": lam1})
                        break
                else:
                    if lam2 is None:
                        lam2 = c
                    elif c != lam2:
                        witnesses.append({"check": "cross-class", "pair": [u, w],
                                          "count": c, "expected": lam2})
                        break
            if witnesses:
                break

    m = len(partition.classes)
    return certificate(
        "ddg",
        parameters={
            "v": n_v, "k": k,
            "lambda1": lam1 if lam1 is not None else 0,
            "lambda2": lam2 if lam2 is not None else 0,
            "m": m, "n": sizes[0] if m else 0,
        },
        witnesses=witnesses,
    )


def extract_ddg_from_srg(g: Graph, clique) -> tuple[Graph, VertexPartition,
                                                    Certificate]:
    """Peel a regular clique off a graph and test the complement remainder.

    Checks that `clique` is a clique whose outside vertices all see the same
    number of clique vertices, takes the complement, induces on the outside
    vertices (in increasing order), groups them by which clique vertices
    they attach to, and runs verify_ddg on the result.
    """
    cl = sorted(set(clique))
    for a, b in combinations(cl, 2):
        if not g.has_edge(a, b):
            raise NotAClique(f"vertices {a} and {b} are not adjacent")
    cl_mask = sum(1 << c for c in cl)
    outside = [u for u in range(g.n) if not (cl_mask >> u & 1)]

    attach = {u: g.rows[u] & cl_mask for u in outside}
    counts = sorted({attach[u].bit_count() for u in outside})
    if len(counts) > 1:
        lo = next(u for u in outside if attach[u].bit_count() == counts[0])
        hi = next(u for u in outside if attach[u].bit_count() == counts[-1])
        raise NotRegularClique(
            f"vertex {lo} sees {counts[0]} clique vertices but "
            f"vertex {hi} sees {counts[-1]}")

    sub = complement(g).induced(outside)
    fibers: dict[int, list[int]] = {}
    for local, u in enumerate(outside):
        fibers.setdefault(attach[u], []).append(local)
    classes = sorted(fibers.values(), key=lambda c: c[0])
    partition = VertexPartition.from_lists(len(outside), classes)
    return sub, partition, verify_ddg(sub, partition)


def counting_lower_bound(q: int, d: int) -> Fraction:
    """Exact rational (q!)^m / ((q^d m^2)^{q^d m} (q^{d+1} m)^{m-1}).

    m = (q^d - 1)/(q - 1).  A crude lower bound on the number of distinct
    outputs; far below 1 at small sizes, informative only asymptotically.
    """
    if q < 2 or d < 2:
        raise ValueError(f"need q >= 2 and d >= 2, got ({q}, {d})")
    m = (q**d - 1) // (q - 1)
    num = Fraction(math.factorial(q)) ** m
    den = Fraction(q**d * m * m) ** (q**d * m) * Fraction(q ** (d + 1) * m) ** (m - 1)
    return num / den


# ---------------------------------------------------------------------------
# text formats: quasigroup as m rows of m integers; family as lines
# `i j : p_0 p_1 ... p_{q-1}` with omitted pairs defaulting to the identity
# and sigma[j][i] derived from sigma[i][j] when only one is given.


def _data_lines(path: str):
    with open(path, encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield lineno, line


def load_quasigroup(path: str) -> LeftQuasigroup:
    rows = []
    for lineno, line in _data_lines(path):
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", line=lineno)
    if not rows:
        raise ParseError(f"{path}: empty quasigroup file")
    m = len(rows)
    for row in rows:
        if len(row) != m:
            raise ShapeError(f"{path}: expected {m}x{m} table, "
                             f"found a row of length {len(row)}")
    return LeftQuasigroup(m, tuple(rows))


def save_quasigroup(qg: LeftQuasigroup, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for row in qg.table:
            fh.write(" ".join(map(str, row)) + "\n")


def load_family(path: str, m: int, q: int) -> BijectionFamily:
    given: dict[tuple[int, int], tuple[int, ...]] = {}
    for lineno, line in _data_lines(path):
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError("expected `i j : permutation`", line=lineno)
        try:
            i, j = (int(tok) for tok in head.split())
            perm = tuple(int(tok) for tok in tail.split())
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", line=lineno)
        if not (0 <= i < m and 0 <= j < m):
            raise ShapeError(f"line {lineno}: pair ({i}, {j}) outside [0, {m})")
        if sorted(perm) != list(range(q)):
            raise ShapeError(f"line {lineno}: not a permutation of [0, {q})")
        if (i, j) in given or (j, i) in given:
            raise ParseError(f"pair ({i}, {j}) given twice", line=lineno)
        given[(i, j)] = perm

    ident = tuple(range(q))
    sigma = [[ident] * m for _ in range(m)]
    for i in range(m):
        sigma[i][i] = given.get((i, i), ident)
        for j in range(i + 1, m):
            fwd, back = given.get((i, j)), given.get((j, i))
            if fwd is None and back is None:
                continue
            if fwd is None:
                fwd = _invert(back)
            if back is None:
                back = _invert(fwd)
            sigma[i][j], sigma[j][i] = fwd, back
    return BijectionFamily(m, q, tuple(tuple(row) for row in sigma))


def save_family(family: BijectionFamily, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for i in range(family.m):
            for j in range(i + 1, family.m):
                perm = " ".join(map(str, family.sigma[i][j]))
                fh.write(f"{i} {j} : {perm}\n")
