"""Block designs on integer point sets.

Two flavours: resolvable designs whose blocks come grouped into parallel
classes (each class partitions the points), and symmetric 2-designs with as
many blocks as points.  Generators come from affine and projective geometry
over a finite field; arbitrary designs can be loaded from a plain-text block
list.  Verifiers check the axioms exhaustively and report a Certificate
instead of raising, so a failed check is data.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ParseError, ShapeError
from .gf import FiniteField, enumerate_hyperplanes, projective_points
from .graphs import Certificate, certificate


@dataclass(frozen=True)
class ResolvableDesign:
    """Blocks grouped into parallel classes, each partitioning [0, n_points)."""

    n_points: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    meta: tuple[int, int, str] = (0, 0, "unknown")

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def blocks_per_class(self) -> int:
        return len(self.classes[0]) if self.classes else 0

    def block_index_table(self) -> list[list[int]]:
        """table[c][p] = index within class c of the block containing p.

        Well-defined only when every class partitions the points; callers
        that need that guarantee run verify_resolvable first.
        """
        table = [[-1] * self.n_points for _ in self.classes]
        for c, cls in enumerate(self.classes):
            for b, block in enumerate(cls):
                for p in block:
                    table[c][p] = b
        return table


@dataclass(frozen=True)
class SymmetricDesign:
    """2-design with equally many points and blocks."""

    n_points: int
    blocks: tuple[tuple[int, ...], ...]
    params: tuple[int, int, int]  # (v, k, lambda)


def affine_geometry_design(field: FiniteField, d: int) -> ResolvableDesign:
    """Point-hyperplane design of the affine space of dimension d over GF(q).

    q^d points; one parallel class per hyperplane direction, so
    (q^d - 1)/(q - 1) classes of q blocks of size q^{d-1}.  Class order and
    block order follow enumerate_hyperplanes.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    classes = tuple(
        tuple(levels) for _, levels in enumerate_hyperplanes(field, d)
    )
    return ResolvableDesign(field.q**d, classes, (field.q, d, "affine-geometry"))


def projective_complement_design(field: FiniteField, d: int) -> SymmetricDesign:
    """Complements of hyperplanes in the projective space of rank d over GF(q).

    Points are the normalized projective points of F_q^d in lexicographic
    order; the block for hyperplane normal a is the set of points off that
    hyperplane.  Parameters ((q^d-1)/(q-1), q^{d-1}, q^{d-2}(q-1)).
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    q = field.q
    pts = projective_points(field, d)
    blocks = []
    for normal in pts:
        blocks.append(tuple(
            i for i, x in enumerate(pts) if field.dot(normal, x) != 0
        ))
    v = (q**d - 1) // (q - 1)
    return SymmetricDesign(v, tuple(blocks), (v, q ** (d - 1), q ** (d - 2) * (q - 1)))


def fano_plane() -> SymmetricDesign:
    """The 2-(7,3,1) design, blocks {i, i+1, i+3} mod 7."""
    blocks = tuple(
        tuple(sorted(((0 + i) % 7, (1 + i) % 7, (3 + i) % 7))) for i in range(7)
    )
    return SymmetricDesign(7, blocks, (7, 3, 1))


def _pair_counts(n_points: int, blocks) -> dict:
    counts: dict[tuple[int, int], int] = {}
    for block in blocks:
        for a, b in combinations(sorted(block), 2):
            counts[(a, b)] = counts.get((a, b), 0) + 1
    return counts


def verify_resolvable(design: ResolvableDesign) -> Certificate:
    """Check the resolvable-design axioms exhaustively.

    Partition per class, constant block size, constant pair balance, and
    constant intersection size for blocks from different classes.  The
    certificate carries the observed constants; the first counterexample of
    each failed kind is recorded as a witness.
    """
    witnesses = []
    n = design.n_points

    for c, cls in enumerate(design.classes):
        seen: set[int] = set()
        ok = True
        for block in cls:
            for p in block:
                if not 0 <= p < n or p in seen:
                    witnesses.append({"check": "partition", "class": c, "point": p})
                    ok = False
                    break
                seen.add(p)
            if not ok:
                break
        if ok and len(seen) != n:
            witnesses.append({"check": "partition", "class": c,
                              "covered": len(seen)})

    sizes = {len(b) for cls in design.classes for b in cls}
    block_size = min(sizes) if sizes else 0
    if len(sizes) > 1:
        witnesses.append({"check": "block-size", "sizes": sorted(sizes)})

    pair_count = 0
    counts = _pair_counts(n, (b for cls in design.classes for b in cls))
    values = set(counts.values())
    if len(counts) == n * (n - 1) // 2 and len(values) == 1:
        pair_count = values.pop()
    elif n > 1:
        witnesses.append({"check": "pair-balance", "values": sorted(values)[:4],
                          "pairs_seen": len(counts)})

    cross = -1
    done = False
    for c1, c2 in combinations(range(design.n_classes), 2):
        for b1 in design.classes[c1]:
            for b2 in design.classes[c2]:
                size = len(set(b1) & set(b2))
                if cross == -1:
                    cross = size
                elif size != cross:
                    witnesses.append({"check": "cross-intersection",
                                      "classes": [c1, c2],
                                      "sizes": [cross, size]})
                    done = True
                    break
            if done:
                break
        if done:
            break

    return certificate(
        "design",
        parameters={
            "n_points": n,
            "n_classes": design.n_classes,
            "blocks_per_class": design.blocks_per_class,
            "block_size": block_size,
            "pair_count": pair_count,
            "cross_intersection": max(cross, 0),
        },
        witnesses=witnesses,
        provenance={"source": design.meta[2]},
    )


def verify_symmetric(design: SymmetricDesign) -> Certificate:
    """Check the symmetric 2-design axioms exhaustively.

    Block count = point count, constant block size = point degree, constant
    pair balance, and constant pairwise block intersection; the last equals
    the pair balance in a symmetric design, and both are reported.
    """
    witnesses = []
    v = design.n_points

    if len(design.blocks) != v:
        witnesses.append({"check": "block-count", "blocks": len(design.blocks),
                          "points": v})

    sizes = {len(set(b)) for b in design.blocks}
    k = min(sizes) if sizes else 0
    if len(sizes) > 1 or any(len(b) != len(set(b)) for b in design.blocks):
        witnesses.append({"check": "block-size", "sizes": sorted(sizes)})

    degrees = [0] * v
    for block in design.blocks:
        for p in block:
            if 0 <= p < v:
                degrees[p] += 1
            else:
                witnesses.append({"check": "point-range", "point": p})
    if len(set(degrees)) > 1 or (degrees and degrees[0] != k):
        witnesses.append({"check": "point-degree", "degrees": sorted(set(degrees))})

    lam = 0
    counts = _pair_counts(v, design.blocks)
    values = set(counts.values())
    if counts and (len(counts) != v * (v - 1) // 2 or len(values) != 1):
        witnesses.append({"check": "pair-balance", "values": sorted(values)[:4],
                          "pairs_seen": len(counts)})
    elif counts:
        lam = values.pop()

    for (i, b1), (j, b2) in combinations(enumerate(design.blocks), 2):
        size = len(set(b1) & set(b2))
        if size != lam:
            witnesses.append({"check": "block-intersection", "blocks": [i, j],
                              "size": size, "expected": lam})
            break

    expected = (v, k, lam)
    if not witnesses and expected != design.params:
        witnesses.append({"check": "declared-params",
                          "declared": list(design.params),
                          "observed": list(expected)})

    return certificate(
        "design",
        parameters={"v": v, "k": k, "lambda": lam},
        witnesses=witnesses,
    )


# ---------------------------------------------------------------------------
# plain-text interchange format
#
# line 1: `resolvable n_points n_classes blocks_per_class`
#         or `symmetric v k lambda`
# then one block per line as space-separated 0-based point indices;
# resolvable files list the classes consecutively; `#` starts a comment.


def _data_lines(path: str):
    with open(path, encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield lineno, line


def _parse_block(line: str, lineno: int, n_points: int) -> tuple[int, ...]:
    try:
        points = tuple(int(tok) for tok in line.split())
    except ValueError:
        raise ParseError(f"non-integer token in block {line!r}", line=lineno)
    if len(set(points)) != len(points):
        raise ShapeError(f"line {lineno}: duplicate point in block {line!r}")
    for p in points:
        if not 0 <= p < n_points:
            raise ShapeError(f"line {lineno}: point {p} outside [0, {n_points})")
    return points


def load_design(path: str, kind: str):
    """Parse a design file; axiom verification stays with the caller."""
    if kind not in ("resolvable", "symmetric"):
        raise ValueError(f"unknown design kind {kind!r}")
    lines = list(_data_lines(path))
    if not lines:
        raise ParseError(f"{path}: no design header found")

    lineno, header = lines[0]
    fields = header.split()
    if fields[0] != kind:
        raise ParseError(f"expected {kind!r} header, got {fields[0]!r}", line=lineno)
    if len(fields) != 4:
        raise ParseError("header needs exactly 3 integers", line=lineno)
    try:
        a, b, c = (int(tok) for tok in fields[1:])
    except ValueError:
        raise ParseError(f"non-integer in header {header!r}", line=lineno)

    body = lines[1:]
    if kind == "resolvable":
        n_points, n_classes, per_class = a, b, c
        if len(body) != n_classes * per_class:
            raise ShapeError(
                f"{path}: expected {n_classes}x{per_class} block lines, "
                f"got {len(body)}")
        blocks = [_parse_block(line, no, n_points) for no, line in body]
        classes = tuple(
            tuple(blocks[i * per_class:(i + 1) * per_class])
            for i in range(n_classes)
        )
        return ResolvableDesign(n_points, classes, (0, 0, f"file:{path}"))

    v, k, lam = a, b, c
    if len(body) != v:
        raise ShapeError(f"{path}: expected {v} block lines, got {len(body)}")
    blocks = tuple(_parse_block(line, no, v) for no, line in body)
    return SymmetricDesign(v, blocks, (v, k, lam))


def save_design(design, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        if isinstance(design, ResolvableDesign):
            fh.write(f"resolvable {design.n_points} {design.n_classes} "
                     f"{design.blocks_per_class}\n")
            for cls in design.classes:
                for block in cls:
                    fh.write(" ".join(map(str, block)) + "\n")
        else:
            v, k, lam = design.params
            fh.write(f"symmetric {v} {k} {lam}\n")
            for block in design.blocks:
                fh.write(" ".join(map(str, block)) + "\n")
