"""Finite disjointness graphs of geodesics, horocycles, and hypercycles.

Vertices are curves; edges join pairs whose interiors are disjoint in the
open half-plane (tangencies at the boundary circle do not create interior
meets, so tangent horocycles are NOT adjacent here -- adjacency means
interior_count == 0, which includes tangent pairs).  The module enumerates
graph automorphisms and searches for isometries realizing a given
automorphism, verified exactly on every curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import HyperkError, InvalidInputError
from .model import (
    BoundaryPoint,
    Curve,
    CurveKind,
    Isometry,
    triple_normalizer,
)
from .predicates import intersection_pattern, linked

MAX_VERTICES = 16


class GraphClass(Enum):
    GEODESIC = "geodesic"
    HOROCYCLE = "horocycle"
    HYPERCYCLE = "hypercycle"
    MIXED = "mixed"


@dataclass(frozen=True)
class GraphAutomorphism:
    """A vertex permutation preserving adjacency; perm[i] is the image of i."""

    perm: Tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def compose(self, other: "GraphAutomorphism") -> "GraphAutomorphism":
        return GraphAutomorphism(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    def inverse(self) -> "GraphAutomorphism":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return GraphAutomorphism(tuple(inv))

    def to_record(self):
        return {"permutation": list(self.perm)}


class DisjointnessGraph:
    """Curves plus the symmetric adjacency matrix of interior-disjointness."""

    __slots__ = ("curves", "adjacency", "graph_class")

    def __init__(self, curves: Sequence[Curve], adjacency, graph_class: GraphClass):
        self.curves = list(curves)
        self.adjacency = adjacency
        self.graph_class = graph_class

    def __len__(self):
        return len(self.curves)

    def edges(self) -> List[Tuple[int, int]]:
        n = len(self.curves)
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.adjacency[i][j]]

    def degree(self, i: int) -> int:
        return sum(1 for v in self.adjacency[i] if v)

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        n = len(self.curves)
        return all(
            self.adjacency[i][j] == self.adjacency[perm[i]][perm[j]]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def to_text(self) -> str:
        lines = [f"vertices {len(self.curves)} class {self.graph_class.value}"]
        for i, c in enumerate(self.curves):
            lines.append(f"{i}: {c.to_text()}")
        for i, j in self.edges():
            lines.append(f"edge {i} {j}")
        return "\n".join(lines)

    def to_record(self) -> dict:
        return {
            "class": self.graph_class.value,
            "curves": [c.to_record() for c in self.curves],
            "edges": [list(e) for e in self.edges()],
        }


def build_graph(curves: Sequence[Curve], allow_mixed: bool = False) -> DisjointnessGraph:
    """Adjacency via the exact pairwise intersection oracle: an edge wherever
    the two curves have no interior meeting point."""
    curves = list(curves)
    n = len(curves)
    if n > MAX_VERTICES:
        raise InvalidInputError(f"at most {MAX_VERTICES} vertices supported, got {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if curves[i] == curves[j]:
                raise InvalidInputError(
                    f"duplicate curves at indices {i} and {j}: {curves[i].to_text()}"
                )
    kinds = {c.kind for c in curves}
    if len(kinds) == 1:
        kind = next(iter(kinds))
        graph_class = {
            CurveKind.GEODESIC: GraphClass.GEODESIC,
            CurveKind.HOROCYCLE: GraphClass.HOROCYCLE,
            CurveKind.HYPERCYCLE: GraphClass.HYPERCYCLE,
        }.get(kind)
        if graph_class is None:
            raise InvalidInputError(f"unsupported curve kind {kind.value} in graph")
    elif allow_mixed:
        graph_class = GraphClass.MIXED
    else:
        raise InvalidInputError(
            "curves of mixed kinds; pass allow_mixed=True to build a mixed graph"
        )
    adjacency = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            pat = intersection_pattern(curves[i], curves[j])
            adjacency[i][j] = adjacency[j][i] = pat.interior_count == 0
    return DisjointnessGraph(curves, adjacency, graph_class)


def automorphisms(g: DisjointnessGraph, cap: int = 10000) -> List[GraphAutomorphism]:
    """All adjacency-preserving vertex permutations, in lexicographic order.

    Backtracking with degree refinement; vertex count is guarded at
    construction time, and exceeding the cap raises with the partial count."""
    n = len(g)
    if n > MAX_VERTICES:
        raise InvalidInputError(f"graph too large ({n} > {MAX_VERTICES})")
    degrees = [g.degree(i) for i in range(n)]
    # neighborhood degree multisets refine the degree invariant
    signature = [
        (degrees[i], tuple(sorted(degrees[j] for j in range(n) if g.adjacency[i][j])))
        for i in range(n)
    ]
    out: List[GraphAutomorphism] = []
    image = [-1] * n
    used = [False] * n

    def extend(i: int):
        if i == n:
            out.append(GraphAutomorphism(tuple(image)))
            if len(out) > cap:
                raise HyperkError(
                    f"automorphism cap {cap} exceeded (at least {len(out)} found)"
                )
            return
        for cand in range(n):
            if used[cand] or signature[cand] != signature[i]:
                continue
            if any(
                g.adjacency[i][j] != g.adjacency[cand][image[j]]
                for j in range(i)
            ):
                continue
            image[i] = cand
            used[cand] = True
            extend(i + 1)
            used[cand] = False
            image[i] = -1

    extend(0)
    return out


def _boundary_data(curve: Curve) -> List[BoundaryPoint]:
    """The boundary points determining the curve's position: endpoints for
    geodesics/hypercycles, the center for horocycles."""
    if curve.kind is CurveKind.HOROCYCLE:
        return [curve.center]
    if not curve.has_exact_endpoints:
        raise InvalidInputError("graph curves need rational boundary data")
    return list(curve.endpoints)


def _candidate_isometries(src_curves: Sequence[Curve], dst_curves: Sequence[Curve]):
    """Isometries sending some boundary-data triple of the source
    configuration to boundary data of the corresponding target curves.  An
    isometry is determined by three boundary points, so if any isometry maps
    curve i to target i for all i, it appears among these candidates."""
    n = len(src_curves)
    src_points: List[Tuple[int, BoundaryPoint]] = []
    dst_points: List[List[BoundaryPoint]] = []
    for i in range(n):
        for p in _boundary_data(src_curves[i]):
            src_points.append((i, p))
        dst_points.append(_boundary_data(dst_curves[i]))

    # choose three distinct source boundary points; their images must be
    # boundary data of the corresponding image curves
    m = len(src_points)
    seen = set()
    for ai in range(m):
        for bi in range(ai + 1, m):
            for ci in range(bi + 1, m):
                triple = (src_points[ai], src_points[bi], src_points[ci])
                pts = [t[1] for t in triple]
                if len({(p.value) for p in pts}) != 3:
                    continue
                img_choices = [dst_points[t[0]] for t in triple]
                for img in _product_distinct(img_choices):
                    key = (tuple(pts), tuple(img))
                    if key in seen:
                        continue
                    seen.add(key)
                    try:
                        yield triple_normalizer(pts, list(img))
                    except (HyperkError, ZeroDivisionError):
                        continue


def _product_distinct(choices: List[List[BoundaryPoint]]):
    def rec(k, acc):
        if k == len(choices):
            yield tuple(acc)
            return
        for p in choices[k]:
            if any(p == q for q in acc):
                continue
            acc.append(p)
            yield from rec(k + 1, acc)
            acc.pop()

    yield from rec(0, [])


def isometry_matching(
    src_curves: Sequence[Curve], dst_curves: Sequence[Curve]
) -> Optional[Isometry]:
    """An isometry mapping src_curves[i] to dst_curves[i] for every i, or
    None.  Candidates come from boundary-data triples of the configurations
    themselves (complete, because an isometry is determined by three
    boundary points) and are verified exactly on every curve."""
    if len(src_curves) != len(dst_curves):
        raise InvalidInputError("source and target curve lists differ in length")
    n = len(src_curves)
    if all(src_curves[i] == dst_curves[i] for i in range(n)):
        return Isometry.identity()
    for cand in _candidate_isometries(src_curves, dst_curves):
        if all(cand.apply_curve(src_curves[i]) == dst_curves[i] for i in range(n)):
            return cand
    return None


def isometry_realizing(
    g: DisjointnessGraph, perm: GraphAutomorphism
) -> Optional[Isometry]:
    """An isometry mapping curve_i to curve_{perm(i)} for every i, or None."""
    if not g.is_automorphism(perm.perm):
        raise InvalidInputError("permutation is not an automorphism of the graph")
    return isometry_matching(g.curves, [g.curves[perm(i)] for i in range(len(g))])


def induced_permutation(g: DisjointnessGraph, iso: Isometry) -> GraphAutomorphism:
    """The vertex permutation induced by an isometry mapping the curve set
    to itself; raises if some image is not in the set."""
    images = [iso.apply_curve(c) for c in g.curves]
    perm = []
    for img in images:
        try:
            perm.append(g.curves.index(img))
        except ValueError:
            raise InvalidInputError("isometry does not preserve the curve set")
    if sorted(perm) != list(range(len(g))):
        raise InvalidInputError("isometry does not permute the curve set")
    return GraphAutomorphism(tuple(perm))


@dataclass(frozen=True)
class LinkCheckResult:
    preserved: bool
    witness: Optional[Tuple[BoundaryPoint, ...]] = None

    def __bool__(self):
        return self.preserved


def link_preserving_check(
    points: Sequence[BoundaryPoint], map_values: Sequence[BoundaryPoint]
) -> LinkCheckResult:
    """Does the sampled map preserve linkedness of every 4-subset?  On
    failure the witness is the offending source quadruple."""
    points = list(points)
    map_values = list(map_values)
    if len(points) != len(map_values):
        raise InvalidInputError("points and map values differ in length")
    if len(set((p.value,) if not p.is_infinity else ("oo",) for p in points)) != len(points):
        raise InvalidInputError("sample points must be distinct")
    if len(set((p.value,) if not p.is_infinity else ("oo",) for p in map_values)) != len(
        map_values
    ):
        raise InvalidInputError("map must be injective on the sample")
    n = len(points)
    from itertools import combinations

    for quad in combinations(range(n), 4):
        a, b, c, d = quad
        # the three pairings of the quadruple into two pairs
        for (p1, p2), (p3, p4) in (
            ((a, b), (c, d)),
            ((a, c), (b, d)),
            ((a, d), (b, c)),
        ):
            before = linked((points[p1], points[p2]), (points[p3], points[p4]))
            after = linked(
                (map_values[p1], map_values[p2]), (map_values[p3], map_values[p4])
            )
            if before != after:
                return LinkCheckResult(
                    False, (points[a], points[b], points[c], points[d])
                )
    return LinkCheckResult(True)
