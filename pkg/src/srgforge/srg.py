"""Strongly regular graphs from divisible design graphs.

Two extension constructions.  The first attaches the points of a symmetric
2-design to a divisible design graph as a coclique, joining each canonical
class to one design block; with the right ingredient parameters the result
is strongly regular with lambda = mu.  The second starts from a strongly
regular graph with lambda = mu + 2 and a partition into maximum cocliques
(a Hoffman coloring), fills in the cocliques to get a divisible design
graph, and attaches a symmetric design as a clique.

Also here: the exhaustive strongly-regular verifier, the triangular graphs,
Seidel switching and the three switched companions of the 28-vertex
triangular graph, and the Hoffman-coloring search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .ddg import DdgParams, theorem1_params, verify_ddg
from .designs import SymmetricDesign, verify_symmetric
from .errors import (NotPrime, NotSrg, PreconditionFailed, ShapeMismatch)
from .graphs import (Certificate, Graph, VertexPartition, certificate,
                     complete_graph, line_graph)
from .spectra import hoffman_coclique_size


@dataclass(frozen=True)
class SrgParams:
    """(v, k, lambda, mu) satisfying k(k-lambda-1) = (v-k-1)mu."""

    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        lhs = self.k * (self.k - self.lam - 1)
        rhs = (self.v - self.k - 1) * self.mu
        if lhs != rhs:
            raise ValueError(f"infeasible parameters: k(k-lambda-1) = {lhs} "
                             f"!= (v-k-1)mu = {rhs}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    @classmethod
    def from_certificate(cls, cert: Certificate) -> "SrgParams":
        p = cert.parameters
        return cls(p["v"], p["k"], p["lambda"], p["mu"])


@dataclass(frozen=True)
class ClassBlockMap:
    """Bijection from canonical class indices to design block indices."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError("mapping is not a bijection onto the block set")

    @property
    def m(self) -> int:
        return len(self.mapping)

    @staticmethod
    def identity(m: int) -> "ClassBlockMap":
        return ClassBlockMap(tuple(range(m)))


@dataclass(frozen=True)
class Srg2Config:
    """Ingredients for the clique-attachment construction."""

    base: Graph
    coloring: VertexPartition
    design: SymmetricDesign
    block_map: ClassBlockMap


# ---------------------------------------------------------------------------
# verification


def verify_srg(g: Graph) -> Certificate:
    """Exhaustive strong-regularity check with inferred parameters.

    Regularity, then a constant common-neighbour count over adjacent pairs
    (lambda) and over non-adjacent pairs (mu), both inferred from the first
    pair of each kind; the feasibility identity is re-checked at the end.
    """
    witnesses = []
    n = g.n
    k = g.degree(0) if n else 0
    for u in range(n):
        if g.degree(u) != k:
            witnesses.append({"check": "regular", "vertices": [0, u],
                              "degrees": [k, g.degree(u)]})
            break

    lam = mu = None
    if not witnesses:
        for u in range(n):
            row_u = g.rows[u]
            for w in range(u + 1, n):
                c = (row_u & g.rows[w]).bit_count()
                if row_u >> w & 1:
                    if lam is None:
                        lam = c
                    elif c != lam:
                        witnesses.append({"check": "lambda", "pair": [u, w],
                                          "count": c, "expected": lam})
                        break
                else:
                    if mu is None:
                        mu = c
                    elif c != mu:
                        witnesses.append({"check": "mu", "pair": [u, w],
                                          "count": c, "expected": mu})
                        break
            if witnesses:
                break

    lam = lam if lam is not None else 0
    mu = mu if mu is not None else 0
    if not witnesses and k * (k - lam - 1) != (n - k - 1) * mu:
        witnesses.append({"check": "feasibility",
                          "lhs": k * (k - lam - 1), "rhs": (n - k - 1) * mu})

    return certificate("srg", parameters={"v": n, "k": k, "lambda": lam,
                                          "mu": mu}, witnesses=witnesses)


# ---------------------------------------------------------------------------
# coclique attachment


def srg1_target_params(q: int, d: int) -> SrgParams:
    """((q^2d - 1)/(q-1), q^{2d-1}, q^{2d-2}(q-1), q^{2d-2}(q-1))."""
    theorem1_params(q, d)  # validates q prime power, d >= 2
    return SrgParams(
        v=(q ** (2 * d) - 1) // (q - 1),
        k=q ** (2 * d - 1),
        lam=q ** (2 * d - 2) * (q - 1),
        mu=q ** (2 * d - 2) * (q - 1),
    )


def _theorem1_qd(params: DdgParams) -> tuple[int, int] | None:
    """Recover (q, d) when params matches the glued-design family."""
    if params.m < 2 or params.n <= params.m:
        return None
    if (params.n - 1) % params.m:
        return None
    q = (params.n - 1) // params.m + 1
    d, t = 0, 1
    while t < params.n:
        t *= q
        d += 1
    if t != params.n or d < 2:
        return None
    try:
        expected = theorem1_params(q, d)
    except (NotPrime, ValueError):
        return None
    return (q, d) if expected == params else None


def construct_srg1(ddg_graph: Graph, partition: VertexPartition,
                   design: SymmetricDesign, block_map: ClassBlockMap) -> Graph:
    """Attach the design points to the graph as a coclique.

    Design point y becomes vertex v + y; it is joined to every vertex of
    canonical class i exactly when y lies in block block_map(i).  Requires
    the input to pass verify_ddg with parameters from the glued-design
    family (so that the attachment counts work out).
    """
    m = len(partition.classes)
    if design.n_points != m:
        raise ShapeMismatch(f"design has {design.n_points} points, "
                            f"partition has {m} classes")
    if block_map.m != m:
        raise ShapeMismatch(f"block map covers {block_map.m} classes, need {m}")

    cert = verify_ddg(ddg_graph, partition)
    if not cert.passed:
        raise PreconditionFailed(f"not a divisible design graph: "
                                 f"{cert.witnesses[0]}")
    params = DdgParams.from_certificate(cert)
    if _theorem1_qd(params) is None:
        raise PreconditionFailed(f"parameters {params.as_tuple()} are not of "
                                 f"the glued-design form")

    v_star = ddg_graph.n
    rows = list(ddg_graph.rows) + [0] * m
    for i, cls in enumerate(partition.classes):
        for y in design.blocks[block_map.mapping[i]]:
            for x in cls:
                rows[x] |= 1 << (v_star + y)
                rows[v_star + y] |= 1 << x
    return Graph(v_star + m, tuple(rows))


def verify_srg1_cases(g: Graph, partition: VertexPartition,
                      design: SymmetricDesign) -> Certificate:
    """Stratified common-neighbour audit of a coclique-attached graph.

    Splits every vertex pair into four strata (same class, different
    classes, both attached, mixed) and checks the exact split of common
    neighbours between the original vertices and the attached coclique
    against the closed forms; all four strata must total q^{2d-2}(q-1).
    """
    witnesses = []
    v_star = partition.n
    m = len(partition.classes)
    n = len(partition.classes[0])
    if design.n_points != m or g.n != v_star + m:
        return certificate("srg", parameters={}, witnesses=[
            {"check": "shape", "graph_n": g.n, "classes": m,
             "design_points": design.n_points}])

    # recover q, d from the class shape alone
    q = (n - 1) // m + 1 if m and (n - 1) % m == 0 else 0
    d, t = 0, 1
    while q >= 2 and t < n:
        t *= q
        d += 1
    if q < 2 or t != n or d < 2:
        return certificate("srg", parameters={}, witnesses=[
            {"check": "shape", "m": m, "n": n}])

    target = q ** (2 * d - 2) * (q - 1)
    expected = {
        "same-class": (q ** (d - 1) * (q**d - q ** (d - 1) - 1), q ** (d - 1)),
        "cross-class": (q ** (d - 2) * (q - 1) * (q**d - 1),
                        q ** (d - 2) * (q - 1)),
        "attached": (q**d * q ** (d - 2) * (q - 1), 0),
        "mixed": (q ** (2 * d - 2) * (q - 1), 0),
    }

    star_mask = (1 << v_star) - 1
    coc_mask = ((1 << g.n) - 1) ^ star_mask
    cls_of = partition.class_of() + [-1] * m

    def stratum(u: int, w: int) -> str:
        if u < v_star and w < v_star:
            return "same-class" if cls_of[u] == cls_of[w] else "cross-class"
        if u >= v_star and w >= v_star:
            return "attached"
        return "mixed"

    for u in range(g.n):
        row_u = g.rows[u]
        for w in range(u + 1, g.n):
            common = row_u & g.rows[w]
            split = ((common & star_mask).bit_count(),
                     (common & coc_mask).bit_count())
            name = stratum(u, w)
            if split != expected[name]:
                witnesses.append({"check": name, "pair": [u, w],
                                  "split": list(split),
                                  "expected": list(expected[name])})
                break
        if witnesses:
            break

    return certificate("srg", parameters={
        "q": q, "d": d, "target": target,
        **{name.replace("-", "_"): sum(pair) for name, pair in expected.items()},
    }, witnesses=witnesses)


# ---------------------------------------------------------------------------
# source graphs: triangular graphs and their switched companions


def triangular_graph(r: int) -> Graph:
    """Line graph of the complete graph on r vertices."""
    if r < 4:
        raise ValueError(f"need r >= 4, got {r}")
    return line_graph(complete_graph(r))


def seidel_switch(g: Graph, vertices) -> Graph:
    """Complement all adjacencies between the vertex set and its complement."""
    s_mask = 0
    for u in vertices:
        s_mask |= 1 << u
    full = (1 << g.n) - 1
    rows = []
    for u in range(g.n):
        row = g.rows[u]
        if s_mask >> u & 1:
            row = (row & s_mask) | ((full & ~s_mask) & ~row)
        else:
            row = (row & ~s_mask) | (s_mask & ~row & full)
        rows.append(row & ~(1 << u))
    return Graph(g.n, tuple(rows))


def _k8_edge_index() -> dict[tuple[int, int], int]:
    edges = sorted(complete_graph(8).edges())
    return {e: i for i, e in enumerate(edges)}


# switching sets inside the 28-vertex triangular graph, named by the
# subgraph of the complete graph on 8 vertices whose edges they are
_CHANG_EDGE_SETS = {
    "4K2": [(0, 1), (2, 3), (4, 5), (6, 7)],
    "C3+C5": [(0, 1), (1, 2), (0, 2),
              (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)],
    "C8": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7)],
}


def chang_graphs() -> list[Graph]:
    """The three Seidel switchings of the 28-vertex triangular graph that
    stay strongly regular (28,12,6,4) without staying isomorphic to it.

    Switching sets: a perfect matching, a triangle plus a pentagon, and an
    8-cycle, each read as a set of line-graph vertices.
    """
    t8 = triangular_graph(8)
    idx = _k8_edge_index()
    out = []
    for name in ("4K2", "C3+C5", "C8"):
        sw = [idx[e] for e in _CHANG_EDGE_SETS[name]]
        out.append(seidel_switch(t8, sw))
    return out


# ---------------------------------------------------------------------------
# Hoffman colorings and the clique attachment


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _cocliques_from(g: Graph, block: list[int], pool: int, size: int):
    """Extend block to cocliques of the target size, ascending order."""
    if len(block) == size:
        yield tuple(block)
        return
    rem = pool
    while rem:
        low = rem & -rem
        w = low.bit_length() - 1
        rem ^= low
        block.append(w)
        yield from _cocliques_from(
            g, block, pool & ~g.rows[w] & ~((low << 1) - 1), size)
        block.pop()


def _colorings(g: Graph, size: int, uncovered: int, acc: list):
    if uncovered == 0:
        yield VertexPartition.from_lists(g.n, [list(b) for b in acc])
        return
    v0 = (uncovered & -uncovered).bit_length() - 1
    pool = uncovered & ~g.rows[v0] & ~((1 << (v0 + 1)) - 1)
    for block in _cocliques_from(g, [v0], pool, size):
        mask = 0
        for w in block:
            mask |= 1 << w
        acc.append(block)
        yield from _colorings(g, size, uncovered & ~mask, acc)
        acc.pop()


def hoffman_colorings(g: Graph):
    """All partitions of g into independent sets of maximum (ratio-bound)
    size, in lexicographic order.  Empty when none exists."""
    cert = verify_srg(g)
    if not cert.passed:
        raise NotSrg(f"not strongly regular: {cert.witnesses[0]}")
    size = hoffman_coclique_size(SrgParams.from_certificate(cert))
    if size.denominator != 1 or size < 1 or g.n % int(size):
        return
    yield from _colorings(g, int(size), (1 << g.n) - 1, [])


def find_hoffman_coloring(g: Graph) -> VertexPartition | None:
    """First Hoffman coloring in deterministic order, or None."""
    return next(hoffman_colorings(g), None)


def construct_ddg_hoffman(base: Graph,
                          coloring: VertexPartition) -> tuple[Graph,
                                                              VertexPartition]:
    """Fill in the coloring classes of a strongly regular graph.

    For a base with lambda = mu + 2 and a Hoffman coloring, adding all
    intra-class edges produces a divisible design graph with parameters
    (mn, k+n-1, n+mu-2, 2k/(m-1)+mu, m, n); that outcome is re-verified
    exhaustively before returning.
    """
    cert = verify_srg(base)
    if not cert.passed:
        raise PreconditionFailed(f"base is not strongly regular: "
                                 f"{cert.witnesses[0]}")
    params = SrgParams.from_certificate(cert)
    if params.lam != params.mu + 2:
        raise PreconditionFailed(f"need lambda = mu + 2, got lambda = "
                                 f"{params.lam}, mu = {params.mu}")
    if coloring.n != base.n:
        raise ShapeMismatch(f"coloring covers {coloring.n} vertices, "
                            f"graph has {base.n}")

    size = hoffman_coclique_size(params)
    if size.denominator != 1:
        raise PreconditionFailed(f"ratio bound {size} is not an integer")
    n = int(size)
    m = len(coloring.classes)
    for cls in coloring.classes:
        if len(cls) != n:
            raise PreconditionFailed(f"class of size {len(cls)} is not a "
                                     f"maximum coclique (need {n})")
        for a, b in combinations(cls, 2):
            if base.has_edge(a, b):
                raise PreconditionFailed(f"class member pair ({a}, {b}) is "
                                         f"adjacent: not a coclique")

    rows = list(base.rows)
    for cls in coloring.classes:
        mask = 0
        for u in cls:
            mask |= 1 << u
        for u in cls:
            rows[u] |= mask & ~(1 << u)
    g = Graph(base.n, tuple(rows))

    lam2 = Fraction(2 * params.k, m - 1) + params.mu
    expected = None
    if lam2.denominator == 1:
        expected = DdgParams(m * n, params.k + n - 1, n + params.mu - 2,
                             int(lam2), m, n)
    out_cert = verify_ddg(g, coloring)
    if expected is None or not out_cert.passed or \
            DdgParams.from_certificate(out_cert) != expected:
        raise PreconditionFailed("filled-in coloring is not a divisible "
                                 "design graph with the expected parameters")
    return g, coloring


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the clique-attachment feasibility test: the three
    quantities that must coincide, and whether they do.  The first value is
    None when k - mu + 1 is not a perfect square."""

    holds: bool
    values: tuple

    def __iter__(self):
        yield self.holds
        yield self.values


def srg2_condition(k: int, mu: int, m: int, n: int, lam_inf: int) -> ConditionReport:
    """Test sqrt(k-mu+1) + n + mu - 2 = m - 2 + n lam_inf = 2k/(m-1) + mu + lam_inf."""
    second = m - 2 + n * lam_inf
    third = Fraction(2 * k, m - 1) + mu + lam_inf
    t = k - mu + 1
    root = math.isqrt(t) if t >= 0 else -1
    if t < 0 or root * root != t:
        return ConditionReport(False, (None, second, third))
    first = root + n + mu - 2
    third = int(third) if third.denominator == 1 else third
    return ConditionReport(first == second == third, (first, second, third))


def construct_srg2(config: Srg2Config) -> Graph:
    """Fill in the coloring, then attach the design points as a clique.

    Design point y becomes vertex v + y, adjacent to all other attached
    points and to every vertex of coloring class i with y in block
    block_map(i).  Requires the three-way parameter condition to hold.
    """
    ddg_g, partition = construct_ddg_hoffman(config.base, config.coloring)
    m = len(partition.classes)
    n = partition.n // m

    if config.design.n_points != m:
        raise ShapeMismatch(f"design has {config.design.n_points} points, "
                            f"coloring has {m} classes")
    if config.block_map.m != m:
        raise ShapeMismatch(f"block map covers {config.block_map.m} classes, "
                            f"need {m}")
    dcert = verify_symmetric(config.design)
    if not dcert.passed:
        raise PreconditionFailed(f"design axioms fail: {dcert.witnesses[0]}")
    lam_inf = dcert.parameters["lambda"]

    base_params = SrgParams.from_certificate(verify_srg(config.base))
    cond = srg2_condition(base_params.k, base_params.mu, m, n, lam_inf)
    if not cond.holds:
        raise PreconditionFailed(f"attachment condition fails: quantities "
                                 f"{cond.values} are not all equal")

    v_star = ddg_g.n
    rows = list(ddg_g.rows) + [0] * m
    for i, cls in enumerate(partition.classes):
        for y in config.design.blocks[config.block_map.mapping[i]]:
            for x in cls:
                rows[x] |= 1 << (v_star + y)
                rows[v_star + y] |= 1 << x
    for a in range(m):
        for b in range(a + 1, m):
            rows[v_star + a] |= 1 << (v_star + b)
            rows[v_star + b] |= 1 << (v_star + a)
    return Graph(v_star + m, tuple(rows))
