"""Exact relational predicates on curves.

Intersection counts, tangency, shared boundary endpoints, the hypercycle
pair taxonomy, the horocycle partial order, linkedness of boundary pairs,
and betweenness of mutually tangent curves are all decided by integer or
rational sign tests for exact curves.  Only the coordinates of reported
intersection points may fall back to floats (when the points are
irrational); the counts never do.  Inexact (float) curves use the same
algorithms with tolerance EPS.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ._rational import Q, sqrt_exact
from .errors import InvalidInputError
from .model import (
    EPS,
    BoundaryPoint,
    Curve,
    CurveKind,
    INFINITY,
    UHPPoint,
)


# ---------------------------------------------------------------------------
# intersection patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionPattern:
    """How two curves meet inside the open half-plane.

    interior_count   number of interior intersection points (tangency counts
                     as one point)
    tangent          True when the curves touch without crossing
    shared_endpoints number of common boundary endpoints (0, 1, or 2)
    interior_points  the interior intersection points; exact when rational
    exact            True when the counts come from exact sign tests
    equal            True when the two curves coincide (all other fields void)
    """

    interior_count: int
    tangent: bool
    shared_endpoints: int
    interior_points: Tuple[UHPPoint, ...]
    exact: bool
    equal: bool = False

    def describe(self) -> str:
        if self.equal:
            return "equal curves"
        tag = "tangent" if self.tangent else "transversal"
        return (
            f"interior_count={self.interior_count} ({tag}), "
            f"shared_endpoints={self.shared_endpoints}"
        )

    def to_record(self) -> dict:
        return {
            "interior_count": self.interior_count,
            "tangent": self.tangent,
            "shared_endpoints": self.shared_endpoints,
            "equal": self.equal,
            "points": [list(p.as_floats()) for p in self.interior_points],
        }


def intersection_pattern(c1: Curve, c2: Curve) -> IntersectionPattern:
    """Exact interior intersection data for a pair of curves.

    Equal curves yield a distinguished pattern with equal=True rather than
    an error.
    """
    if c1 == c2:
        return IntersectionPattern(0, False, 0, (), c1.exact, equal=True)
    if c1.exact and c2.exact:
        count, tangent, points = _interior_meet_exact(c1, c2)
        shared = _shared_endpoints_exact(c1, c2)
        return IntersectionPattern(count, tangent, shared, points, True)
    count, tangent, points = _interior_meet_float(c1, c2)
    shared = _shared_endpoints_float(c1, c2)
    return IntersectionPattern(count, tangent, shared, points, False)


def _interior_meet_exact(c1: Curve, c2: Curve):
    a1, b1, c1_, d1 = (Q(v) for v in c1.circle.coeffs())
    a2, b2, c2_, d2 = (Q(v) for v in c2.circle.coeffs())
    if a1 == 0 and a2 == 0:
        return _line_line_exact((b1, c1_, d1), (b2, c2_, d2))
    if a1 == 0:
        return _line_circle_exact((b1, c1_, d1), (a2, b2, c2_, d2))
    if a2 == 0:
        return _line_circle_exact((b2, c2_, d2), (a1, b1, c1_, d1))
    # radical line: a2*C1 - a1*C2 vanishes on every common point
    line = (a2 * b1 - a1 * b2, a2 * c1_ - a1 * c2_, a2 * d1 - a1 * d2)
    if line == (0, 0, 0):  # proportional circles, excluded by c1 != c2
        raise InvalidInputError("curves lie on the same circle")
    return _line_circle_exact(line, (a1, b1, c1_, d1))


def _line_line_exact(l1, l2):
    (B1, C1, D1), (B2, C2, D2) = l1, l2
    det = B1 * C2 - B2 * C1
    if det == 0:
        return 0, False, ()
    x = (C1 * D2 - C2 * D1) / det
    y = (B2 * D1 - B1 * D2) / det
    if y > 0:
        return 1, False, (UHPPoint(x, y),)
    return 0, False, ()


def _line_circle_exact(line, circle):
    """Meet of line Bx+Cy+D=0 with circle a(x^2+y^2)+bx+cy+d=0 (a != 0), y>0."""
    B, C, D = line
    a, b, c, d = circle
    if B == 0 and C == 0:
        return 0, False, ()  # radical line at infinity: concentric circles
    if C == 0:
        # vertical line x = x0; quadratic a y^2 + c y + E = 0
        x0 = -D / B
        E = a * x0 * x0 + b * x0 + d
        disc = c * c - 4 * a * E
        if disc < 0:
            return 0, False, ()
        if disc == 0:
            y_star = -c / (2 * a)
            if y_star > 0:
                return 1, True, (UHPPoint(x0, y_star),)
            return 0, False, ()
        # two distinct roots; count the positive ones by sign of product/sum
        points = _positive_roots_points(a, c, E, x0)
        return len(points), False, points
    # substitute y = -(Bx+D)/C; multiply by C^2
    p2 = a * (B * B + C * C)
    p1 = 2 * a * B * D + b * C * C - c * B * C
    p0 = a * D * D - c * C * D + d * C * C
    disc = p1 * p1 - 4 * p2 * p0
    if disc < 0:
        return 0, False, ()
    if disc == 0:
        x_star = -p1 / (2 * p2)
        y_star = -(B * x_star + D) / C
        if y_star > 0:
            return 1, True, (UHPPoint(x_star, y_star),)
        return 0, False, ()
    # two distinct roots x1 < x2 of P; y_i = -B(x_i - x0)/C with x0 = -D/B,
    # decided without taking the square root
    root = sqrt_exact(disc)
    if B == 0:
        y_const = -D / C
        if y_const <= 0:
            return 0, False, ()
        n_pos = 2
    else:
        x0 = -D / B
        s = 1 if -B * C > 0 else -1  # y_i > 0  iff  s*(x_i - x0) > 0
        val = p2 * x0 * x0 + p1 * x0 + p0  # sign of P at x0 (p2 > 0)
        if val < 0:
            n_pos = 1  # x0 strictly between the roots
        elif val > 0:
            vertex = -p1 / (2 * p2)
            both_side = 1 if x0 < vertex else -1  # side of both roots w.r.t. x0
            n_pos = 2 if s == both_side else 0
        else:
            other = -p1 / p2 - x0  # second root (x0 itself gives y = 0)
            n_pos = 1 if s * (other - x0) > 0 else 0
    if n_pos == 0:
        return 0, False, ()
    points = []
    if root is not None:
        xs = ((-p1 - root) / (2 * p2), (-p1 + root) / (2 * p2))
        for x in xs:
            y = -(B * x + D) / C
            if y > 0:
                points.append(UHPPoint(x, y))
    else:
        fr = math.sqrt(float(disc))
        for x in ((-float(p1) - fr) / (2 * float(p2)), (-float(p1) + fr) / (2 * float(p2))):
            y = -(float(B) * x + float(D)) / float(C)
            if y > EPS:
                points.append(UHPPoint(x, y, exact=False))
    assert len(points) == n_pos or root is None
    return n_pos, False, tuple(points)


def _positive_roots_points(a, c, E, x0):
    """Points (x0, y) with a y^2 + c y + E = 0, y > 0, two distinct roots."""
    disc = c * c - 4 * a * E
    root = sqrt_exact(disc)
    prod = E / a
    tot = -c / a
    if prod > 0:
        n_pos = 2 if tot > 0 else 0
    elif prod < 0:
        n_pos = 1
    else:
        n_pos = 1 if tot > 0 else 0
    if n_pos == 0:
        return ()
    if root is not None:
        ys = ((-c - root) / (2 * a), (-c + root) / (2 * a))
        return tuple(UHPPoint(x0, y) for y in sorted(ys) if y > 0)
    fr = math.sqrt(float(disc))
    ys = ((-float(c) - fr) / (2 * float(a)), (-float(c) + fr) / (2 * float(a)))
    return tuple(UHPPoint(float(x0), y, exact=False) for y in sorted(ys) if y > EPS)


# -- shared endpoints --------------------------------------------------------


def _has_infinite_endpoint(curve: Curve) -> bool:
    a, b = curve.circle.a, curve.circle.b
    tol = 0 if curve.exact else EPS
    return abs(a) <= tol


def _shared_endpoints_exact(c1: Curve, c2: Curve) -> int:
    a1, b1, d1 = c1.circle.a, c1.circle.b, c1.circle.d
    a2, b2, d2 = c2.circle.a, c2.circle.b, c2.circle.d
    if a1 != 0 and a2 != 0:
        if (a1 * b2 == a2 * b1) and (a1 * d2 == a2 * d1):
            # identical real-axis trace: all endpoints shared
            return 2 if b1 * b1 - 4 * a1 * d1 > 0 else 1
        res = (a1 * d2 - a2 * d1) ** 2 - (a1 * b2 - a2 * b1) * (b1 * d2 - b2 * d1)
        return 1 if res == 0 else 0
    if a1 == 0 and a2 == 0:
        shared = 1  # both lines pass through infinity
        if b1 != 0 and b2 != 0 and b1 * d2 == b2 * d1:
            shared = 2  # same finite foot as well
        if b1 == 0 or b2 == 0:
            # a horizontal line's only endpoint is infinity
            shared = 1
        return shared
    line, circ = (c1, c2) if a1 == 0 else (c2, c1)
    if line.circle.b == 0:
        return 0  # horizontal line: endpoint only at infinity
    x = Q(-line.circle.d) / Q(line.circle.b)
    a, b, d = circ.circle.a, circ.circle.b, circ.circle.d
    return 1 if a * x * x + b * x + d == 0 else 0


def _shared_endpoints_float(c1: Curve, c2: Curve) -> int:
    e1 = c1.endpoint_floats()
    e2 = c2.endpoint_floats()
    # a horocycle's single boundary point is its center, which counts
    shared = 0
    used = set()
    for u in e1:
        for j, v in enumerate(e2):
            if j in used:
                continue
            if (math.isinf(u) and math.isinf(v)) or (
                not math.isinf(u) and not math.isinf(v) and abs(u - v) <= EPS * max(1.0, abs(u))
            ):
                shared += 1
                used.add(j)
                break
    return shared


# -- float fallback ----------------------------------------------------------


def _interior_meet_float(c1: Curve, c2: Curve):
    a1, b1, c1_, d1 = (float(v) for v in c1.circle.coeffs())
    a2, b2, c2_, d2 = (float(v) for v in c2.circle.coeffs())
    if abs(a1) <= EPS and abs(a2) <= EPS:
        det = b1 * c2_ - b2 * c1_
        if abs(det) <= EPS:
            return 0, False, ()
        x = (c1_ * d2 - c2_ * d1) / det
        y = (b2 * d1 - b1 * d2) / det
        return (1, False, (UHPPoint(x, y, exact=False),)) if y > EPS else (0, False, ())
    if abs(a1) <= EPS:
        return _line_circle_float((b1, c1_, d1), (a2, b2, c2_, d2))
    if abs(a2) <= EPS:
        return _line_circle_float((b2, c2_, d2), (a1, b1, c1_, d1))
    line = (a2 * b1 - a1 * b2, a2 * c1_ - a1 * c2_, a2 * d1 - a1 * d2)
    return _line_circle_float(line, (a1, b1, c1_, d1))


def _line_circle_float(line, circle):
    B, C, D = line
    a, b, c, d = circle
    scale = max(abs(B), abs(C), abs(D))
    if scale <= EPS:
        return 0, False, ()
    B, C, D = B / scale, C / scale, D / scale
    if abs(C) <= EPS:
        x0 = -D / B
        E = a * x0 * x0 + b * x0 + d
        disc = c * c - 4 * a * E
        if disc < -EPS:
            return 0, False, ()
        if disc <= EPS:
            y_star = -c / (2 * a)
            return (1, True, (UHPPoint(x0, y_star, exact=False),)) if y_star > EPS else (0, False, ())
        r = math.sqrt(disc)
        pts = tuple(
            UHPPoint(x0, y, exact=False)
            for y in sorted(((-c - r) / (2 * a), (-c + r) / (2 * a)))
            if y > EPS
        )
        return len(pts), False, pts
    p2 = a * (B * B + C * C)
    p1 = 2 * a * B * D + b * C * C - c * B * C
    p0 = a * D * D - c * C * D + d * C * C
    disc = p1 * p1 - 4 * p2 * p0
    norm = max(abs(p1 * p1), abs(4 * p2 * p0), 1e-300)
    if disc < -EPS * norm:
        return 0, False, ()
    if disc <= EPS * norm:
        x_star = -p1 / (2 * p2)
        y_star = -(B * x_star + D) / C
        return (1, True, (UHPPoint(x_star, y_star, exact=False),)) if y_star > EPS else (0, False, ())
    r = math.sqrt(disc)
    pts = []
    for x in sorted(((-p1 - r) / (2 * p2), (-p1 + r) / (2 * p2))):
        y = -(B * x + D) / C
        if y > EPS:
            pts.append(UHPPoint(x, y, exact=False))
    return len(pts), False, tuple(pts)


# ---------------------------------------------------------------------------
# pair taxonomy
# ---------------------------------------------------------------------------


class HypercyclePairType(Enum):
    EQUAL = "equal"
    SAME_ENDPOINTS = "same_endpoints"
    TYPE1 = "type1"  # interior tangency, no shared endpoint
    TYPE2 = "type2"  # one crossing and one shared endpoint
    TYPE3 = "type3"  # one crossing, no shared endpoint
    TYPE4 = "type4"  # two crossings
    DISJOINT = "disjoint"


def hypercycle_pair_type(c1: Curve, c2: Curve) -> HypercyclePairType:
    """Classify the relative position of two hypercycles."""
    for c in (c1, c2):
        if c.kind is not CurveKind.HYPERCYCLE:
            raise InvalidInputError("hypercycle_pair_type needs two hypercycles")
    return pair_type_from_pattern(c1, c2)


def pair_type_from_pattern(c1: Curve, c2: Curve) -> HypercyclePairType:
    """The same taxonomy applied to any pair of curves."""
    if c1 == c2:
        return HypercyclePairType.EQUAL
    pat = intersection_pattern(c1, c2)
    if pat.shared_endpoints == 2:
        return HypercyclePairType.SAME_ENDPOINTS
    if pat.tangent:
        return HypercyclePairType.TYPE1
    if pat.interior_count == 2:
        return HypercyclePairType.TYPE4
    if pat.interior_count == 1:
        return (
            HypercyclePairType.TYPE2
            if pat.shared_endpoints == 1
            else HypercyclePairType.TYPE3
        )
    return HypercyclePairType.DISJOINT


def same_endpoints(c1: Curve, c2: Curve) -> bool:
    """Do the two curves have identical boundary endpoint sets?

    Defined for curves with two endpoints (geodesics and hypercycles).
    """
    for c in (c1, c2):
        if c.kind is CurveKind.HOROCYCLE:
            raise InvalidInputError("same_endpoints needs two-endpoint curves")
    if c1.exact and c2.exact:
        a1, b1, d1 = c1.circle.a, c1.circle.b, c1.circle.d
        a2, b2, d2 = c2.circle.a, c2.circle.b, c2.circle.d
        if a1 != 0 and a2 != 0:
            return a1 * b2 == a2 * b1 and a1 * d2 == a2 * d1
        if a1 == 0 and a2 == 0:
            if b1 == 0 or b2 == 0:
                return b1 == 0 and b2 == 0  # horizontal: endpoint set {oo}
            return b1 * d2 == b2 * d1
        return False
    e1, e2 = c1.endpoint_floats(), c2.endpoint_floats()
    if len(e1) != len(e2):
        return False
    return all(
        (math.isinf(u) and math.isinf(v)) or abs(u - v) <= EPS * max(1.0, abs(u))
        for u, v in zip(e1, e2)
    )


# ---------------------------------------------------------------------------
# horocycle order
# ---------------------------------------------------------------------------


class HorocycleOrder(Enum):
    LESS_OR_EQUAL = "leq"
    GREATER_OR_EQUAL = "geq"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def horocycle_leq(h1: Curve, h2: Curve) -> HorocycleOrder:
    """Horoball-containment order.  LESS_OR_EQUAL means horoball(h1) is
    contained in horoball(h2); horocycles at different centers are
    incomparable.

    Horoballs: the closed disk bounded by a finite-center horocycle, and the
    closed region lying above a horizontal-line horocycle (so for center
    infinity a *higher* line bounds a *smaller* horoball).
    """
    for h in (h1, h2):
        if h.kind is not CurveKind.HOROCYCLE:
            raise InvalidInputError("horocycle_leq needs two horocycles")
    if h1.center != h2.center:
        return HorocycleOrder.INCOMPARABLE
    if h1.size == h2.size:
        return HorocycleOrder.EQUAL
    smaller_ball = h1.size > h2.size if h1.center.is_infinity else h1.size < h2.size
    return HorocycleOrder.LESS_OR_EQUAL if smaller_ball else HorocycleOrder.GREATER_OR_EQUAL


# ---------------------------------------------------------------------------
# linkedness of boundary pairs
# ---------------------------------------------------------------------------


def linked(pair1, pair2) -> bool:
    """Are the two boundary pairs linked on the circle at infinity?

    {a, b} and {c, d} (all distinct) are linked when exactly one of c, d
    lies on each arc determined by a and b.  Pairs sharing a point are not
    linked.
    """
    p = tuple(pair1)
    q = tuple(pair2)
    if len(set(p)) != 2 or len(set(q)) != 2:
        raise InvalidInputError("linked needs two pairs of distinct points")
    if set(p) & set(q):
        return False

    def inside(point: BoundaryPoint, a: BoundaryPoint, b: BoundaryPoint) -> bool:
        # is `point` in the finite open interval (a, b)?  (oo is never inside
        # a finite interval; intervals with an infinite end are the
        # complementary rays)
        if a.is_infinity or b.is_infinity:
            raise AssertionError("handled by caller")
        lo, hi = min(a.value, b.value), max(a.value, b.value)
        return (not point.is_infinity) and lo < point.value < hi

    a, b = p
    c, d = q
    if a.is_infinity or b.is_infinity:
        f = (b if a.is_infinity else a).value
        # arcs determined by {oo, f} are the rays x < f and x > f
        if c.is_infinity or d.is_infinity:
            return False  # ruled out: pairs would share oo
        return (c.value - f) * (d.value - f) < 0
    if c.is_infinity or d.is_infinity:
        fin = (d if c.is_infinity else c)
        # {c, d} = {oo, fin}: linked iff fin separates from oo's side, i.e.
        # fin strictly inside (a, b) -- oo is always outside
        return inside(fin, a, b)
    return inside(c, a, b) != inside(d, a, b)


def geodesics_linked(g1: Curve, g2: Curve) -> bool:
    """Linkedness of the endpoint pairs of two geodesics (they cross iff linked)."""
    for g in (g1, g2):
        if g.kind is not CurveKind.GEODESIC:
            raise InvalidInputError("geodesics_linked needs geodesics")
    return linked(g1.endpoints, g2.endpoints)


# ---------------------------------------------------------------------------
# betweenness of mutually tangent curves
# ---------------------------------------------------------------------------


def _signed_curvature_key(curve: Curve, point: UHPPoint, normal):
    """Comparison key for signed Euclidean curvature at the tangency point.

    Key (s, n2, d2) encodes s * sqrt(n2/d2) with s in {-1, 0, 1}; curvature
    magnitude is 2|a|/sqrt(b^2+c^2-4ad), sign +1 when the center lies on the
    `normal` side of the point.
    """
    a, b, c, d = (Q(v) for v in curve.circle.coeffs())
    if a == 0:
        return (0, Q(0), Q(1))
    ox, oy = -b / (2 * a), -c / (2 * a)
    nx, ny = normal
    side = (ox - point.x) * nx + (oy - point.y) * ny
    assert side != 0, "tangent circle center cannot lie on the tangent line"
    s = 1 if side > 0 else -1
    nondeg = b * b + c * c - 4 * a * d
    return (s, 4 * a * a, nondeg)


def _curvature_less(k1, k2) -> bool:
    s1, n1, d1 = k1
    s2, n2, d2 = k2
    if s1 != s2:
        return s1 < s2
    if s1 == 0:
        return False
    # compare s*sqrt(n1/d1) vs s*sqrt(n2/d2) exactly via cross-multiplied squares
    lhs, rhs = n1 * d2, n2 * d1
    if s1 > 0:
        return lhs < rhs
    return lhs > rhs


def between_tangent(c1: Curve, c2: Curve, c3: Curve) -> int:
    """Of three curves mutually tangent at one interior point, the index
    (0, 1, or 2) of the middle one.

    Near the tangency point the three curves are nested; the middle curve
    is the one locally between the other two, found by ordering exact signed
    Euclidean curvatures at the point.
    """
    curves = (c1, c2, c3)
    if len({c.circle for c in curves}) != 3:
        raise InvalidInputError("between_tangent needs three distinct curves")
    if not all(c.exact for c in curves):
        raise InvalidInputError("between_tangent needs exact curves")
    pats = {}
    for i in range(3):
        for j in range(i + 1, 3):
            pat = intersection_pattern(curves[i], curves[j])
            if not pat.tangent:
                raise InvalidInputError(
                    f"curves {i} and {j} are not tangent at an interior point"
                )
            pats[(i, j)] = pat
    point = pats[(0, 1)].interior_points[0]
    for pat in pats.values():
        if pat.interior_points[0] != point:
            raise InvalidInputError("curves are not all tangent at the same point")
    # reference normal: toward the first circle-type curve's center, or the
    # line normal (b, c) if only one curve is a circle -- at least two of
    # three distinct tangent curves are circles, so this always exists
    normal = None
    for c in curves:
        a, b, cc, d = (Q(v) for v in c.circle.coeffs())
        if a != 0:
            normal = (-b / (2 * a) - point.x, -cc / (2 * a) - point.y)
            break
    keys = [_signed_curvature_key(c, point, normal) for c in curves]
    order = sorted(range(3), key=lambda i: _CurvKey(keys[i]))
    return order[1]


class _CurvKey:
    """Orderable wrapper around a signed-curvature key."""

    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return _curvature_less(self.key, other.key)
