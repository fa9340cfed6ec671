"""Half-plane model core: boundary points, generalized circles, curves, isometries.

Every curve (geodesic, horocycle, hypercycle) is carried by a generalized
circle a(x^2+y^2) + bx + cy + d = 0 with exact integer coefficients in
canonical form; all classification reduces to integer sign tests.  Curves
built from irrational data (a few constructions need them) carry float
coefficients and are flagged inexact; predicates on them use a documented
tolerance instead of exact signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Optional, Tuple, Union

from ._rational import Q, denom, isqrt_exact, is_rational, numer, q_from_str, q_str
from .errors import DegenerateResultError, InvalidInputError

#: Tolerance for all inexact (float-coefficient) predicates and for
#: reported intersection-point coordinates.
EPS = 1e-9


# ---------------------------------------------------------------------------
# boundary and interior points
# ---------------------------------------------------------------------------


class BoundaryPoint:
    """A point of the circle at infinity: an exact rational, or infinity."""

    __slots__ = ("value",)

    def __init__(self, value=None):
        # value None encodes the point at infinity
        self.value = None if value is None else Q(value)

    @staticmethod
    def finite(value) -> "BoundaryPoint":
        return BoundaryPoint(Q(value))

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(("bp", self.value))

    def __repr__(self):
        return "oo" if self.is_infinity else q_str(self.value)

    @staticmethod
    def parse(text: str) -> "BoundaryPoint":
        text = text.strip()
        if text in ("oo", "inf", "Inf", "infty", "Infinity", "infinity"):
            return INFINITY
        return BoundaryPoint.finite(q_from_str(text))

    def sort_key(self):
        # infinity sorts after every finite value
        return (1, 0) if self.is_infinity else (0, self.value)


INFINITY = BoundaryPoint(None)


class UHPPoint:
    """Interior point x+iy, y > 0; exact when both coordinates are rational."""

    __slots__ = ("x", "y", "exact")

    def __init__(self, x, y, exact: Optional[bool] = None):
        if exact is None:
            exact = is_rational(x) and is_rational(y)
        if exact:
            x, y = Q(x), Q(y)
        else:
            x, y = float(x), float(y)
        if not (y > 0):
            raise InvalidInputError(f"point ({x}, {y}) is not in the open half-plane")
        self.x, self.y, self.exact = x, y, exact

    def as_floats(self) -> Tuple[float, float]:
        return float(self.x), float(self.y)

    def __eq__(self, other):
        if not isinstance(other, UHPPoint):
            return NotImplemented
        if self.exact and other.exact:
            return self.x == other.x and self.y == other.y
        ax, ay = self.as_floats()
        bx, by = other.as_floats()
        return math.isclose(ax, bx, abs_tol=EPS) and math.isclose(ay, by, abs_tol=EPS)

    def __hash__(self):
        return hash(("uhp", self.as_floats()))

    def __repr__(self):
        if self.exact:
            return f"({q_str(self.x)}, {q_str(self.y)})"
        return f"({self.x:.9g}, {self.y:.9g})~"


# ---------------------------------------------------------------------------
# generalized circles
# ---------------------------------------------------------------------------


def _gcd_all(values):
    return reduce(math.gcd, values)


class GeneralizedCircle:
    """Coefficients of a(x^2+y^2) + bx + cy + d = 0 in canonical form.

    Exact circles store coprime integers with the first nonzero of (a, b, c)
    positive.  Inexact circles store unit-norm floats with the same sign
    convention at tolerance EPS.
    """

    __slots__ = ("a", "b", "c", "d", "exact")

    def __init__(self, a, b, c, d, exact: Optional[bool] = None):
        if exact is None:
            exact = all(is_rational(v) for v in (a, b, c, d))
        if exact:
            qa, qb, qc, qd = Q(a), Q(b), Q(c), Q(d)
            # clear denominators, then reduce to coprime integers
            lcm = 1
            for v in (qa, qb, qc, qd):
                lcm = lcm * denom(v) // math.gcd(lcm, denom(v))
            ia, ib, ic, id_ = (numer(v * lcm) for v in (qa, qb, qc, qd))
            g = _gcd_all([abs(ia), abs(ib), abs(ic), abs(id_)])
            if g > 1:
                ia, ib, ic, id_ = ia // g, ib // g, ic // g, id_ // g
            lead = ia if ia != 0 else (ib if ib != 0 else ic)
            if lead == 0:
                raise DegenerateResultError("degenerate circle: a = b = c = 0")
            if lead < 0:
                ia, ib, ic, id_ = -ia, -ib, -ic, -id_
            self.a, self.b, self.c, self.d = ia, ib, ic, id_
        else:
            fa, fb, fc, fd = float(a), float(b), float(c), float(d)
            # pre-scale by the largest magnitude so the norm cannot overflow
            big = max(abs(fa), abs(fb), abs(fc), abs(fd))
            if big == 0:
                raise DegenerateResultError("degenerate circle: all coefficients zero")
            fa, fb, fc, fd = fa / big, fb / big, fc / big, fd / big
            norm = math.sqrt(fa * fa + fb * fb + fc * fc + fd * fd)
            if max(abs(fa), abs(fb), abs(fc)) <= EPS * norm:
                raise DegenerateResultError("degenerate circle: a = b = c ~ 0")
            fa, fb, fc, fd = fa / norm, fb / norm, fc / norm, fd / norm
            lead = fa if abs(fa) > EPS else (fb if abs(fb) > EPS else fc)
            if lead < 0:
                fa, fb, fc, fd = -fa, -fb, -fc, -fd
            self.a, self.b, self.c, self.d = fa, fb, fc, fd
        self.exact = exact
        if self.nondegeneracy() <= (0 if exact else EPS):
            raise InvalidInputError(
                f"coefficients ({a}, {b}, {c}, {d}) define a point or empty locus"
            )

    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def nondegeneracy(self):
        """b^2 + c^2 - 4ad; positive for a real circle or line."""
        return self.b * self.b + self.c * self.c - 4 * self.a * self.d

    def boundary_disc(self):
        """b^2 - 4ad: discriminant of the real-axis trace a x^2 + b x + d."""
        return self.b * self.b - 4 * self.a * self.d

    def evaluate(self, x, y):
        return self.a * (x * x + y * y) + self.b * x + self.c * y + self.d

    def evaluate_boundary(self, p: BoundaryPoint):
        """Sign carrier of the real-axis trace at p (sign of a at infinity)."""
        if p.is_infinity:
            return self.a
        x = p.value
        return self.a * x * x + self.b * x + self.d

    def contains_point(self, x, y) -> bool:
        v = self.evaluate(x, y)
        return v == 0 if self.exact else abs(v) <= EPS

    def __eq__(self, other):
        if not isinstance(other, GeneralizedCircle):
            return NotImplemented
        if self.exact != other.exact:
            return False
        if self.exact:
            return self.coeffs() == other.coeffs()
        return all(abs(u - v) <= EPS for u, v in zip(self.coeffs(), other.coeffs()))

    def __hash__(self):
        if self.exact:
            return hash(("gc", self.coeffs()))
        return hash(("gc~", tuple(round(v, 6) for v in self.coeffs())))

    def __repr__(self):
        if self.exact:
            return f"Circle(a={self.a}, b={self.b}, c={self.c}, d={self.d})"
        return "Circle~(a={:.6g}, b={:.6g}, c={:.6g}, d={:.6g})".format(*self.coeffs())


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


class CurveKind(Enum):
    GEODESIC = "geodesic"
    HOROCYCLE = "horocycle"
    HYPERCYCLE = "hypercycle"
    HYPERBOLIC_CIRCLE = "hyperbolic_circle"
    NOT_IN_UPPER_HALF_PLANE = "not_in_upper_half_plane"


def classify_curve(circle: GeneralizedCircle) -> CurveKind:
    """Kind of the y>0 restriction, by sign tests on (a, b, c, b^2-4ad)."""
    a, b, c, _ = circle.coeffs()
    tol = 0 if circle.exact else EPS
    disc = circle.boundary_disc()
    if abs(a) > tol:
        center_above = -c * a > 0  # sign of center height -c/(2a)
        if abs(c) <= tol:
            return CurveKind.GEODESIC
        disc_zero = disc == 0 if circle.exact else abs(disc) <= EPS * circle.nondegeneracy()
        if disc_zero:
            return CurveKind.HOROCYCLE if center_above else CurveKind.NOT_IN_UPPER_HALF_PLANE
        if disc > 0:
            return CurveKind.HYPERCYCLE
        return (
            CurveKind.HYPERBOLIC_CIRCLE
            if center_above
            else CurveKind.NOT_IN_UPPER_HALF_PLANE
        )
    # line b x + c y + d = 0
    if abs(c) <= tol:
        return CurveKind.GEODESIC  # vertical line
    if abs(b) <= tol:
        # horizontal line y = -d/c
        return (
            CurveKind.HOROCYCLE
            if -circle.d * circle.c > tol
            else CurveKind.NOT_IN_UPPER_HALF_PLANE
        )
    return CurveKind.HYPERCYCLE  # oblique line


# ---------------------------------------------------------------------------
# curves
# ---------------------------------------------------------------------------

_CURVE_KINDS = (CurveKind.GEODESIC, CurveKind.HOROCYCLE, CurveKind.HYPERCYCLE)


class Curve:
    """A geodesic, horocycle, or hypercycle with its derived boundary data."""

    __slots__ = ("circle", "kind", "_endpoints", "center", "size")

    def __init__(self, circle: GeneralizedCircle):
        kind = classify_curve(circle)
        if kind not in _CURVE_KINDS:
            raise InvalidInputError(f"locus classifies as {kind.value}, not a curve")
        self.circle = circle
        self.kind = kind
        self._endpoints = self._derive_endpoints()
        self.center, self.size = self._derive_horodata()

    # -- derived data ------------------------------------------------------

    def _derive_endpoints(self):
        a, b, c, d = self.circle.coeffs()
        if not self.circle.exact:
            return None
        if a != 0:
            disc = b * b - 4 * a * d
            if disc == 0:
                return (BoundaryPoint.finite(Q(-b, 2 * a)),)
            r = isqrt_exact(disc)
            if r is None:
                return None  # irrational endpoints; use endpoint_floats()
            lo, hi = Q(-b - r, 2 * a), Q(-b + r, 2 * a)
            if lo > hi:
                lo, hi = hi, lo
            return (BoundaryPoint.finite(lo), BoundaryPoint.finite(hi))
        if b == 0:
            return (INFINITY,)  # horizontal line: center at infinity
        return (BoundaryPoint.finite(Q(-d, b)), INFINITY)

    def _derive_horodata(self):
        if self.kind is not CurveKind.HOROCYCLE:
            return None, None
        a, b, c, d = self.circle.coeffs()
        if self.circle.exact:
            if a != 0:
                return BoundaryPoint.finite(Q(-b, 2 * a)), Q(-c, 2 * a)
            return INFINITY, Q(-d, c)
        if abs(a) > EPS:
            return BoundaryPoint.finite(Fraction(-b / (2 * a))), -c / (2 * a)
        return INFINITY, -d / c

    @property
    def exact(self) -> bool:
        return self.circle.exact

    @property
    def endpoints(self) -> Tuple[BoundaryPoint, ...]:
        """Endpoint set on the boundary circle; exact rationals required."""
        if self._endpoints is None:
            raise InvalidInputError(
                "curve has irrational endpoints; use endpoint_floats()"
            )
        return self._endpoints

    @property
    def has_exact_endpoints(self) -> bool:
        return self._endpoints is not None

    def endpoint_floats(self):
        """Endpoints as floats, with math.inf standing in for infinity."""
        a, b, c, d = (float(v) for v in self.circle.coeffs())
        if abs(a) > (0 if self.circle.exact else EPS) and a != 0:
            disc = b * b - 4 * a * d
            if disc <= 0:
                return (-b / (2 * a),)
            r = math.sqrt(disc)
            lo, hi = (-b - r) / (2 * a), (-b + r) / (2 * a)
            return (min(lo, hi), max(lo, hi))
        if abs(b) <= (0 if self.circle.exact else EPS):
            return (math.inf,)
        return (-d / b, math.inf)

    def euclidean_center_radius(self):
        """(cx, cy, r) floats for circle-type curves, None for lines."""
        a, b, c, d = (float(v) for v in self.circle.coeffs())
        if abs(a) <= (0 if self.circle.exact else EPS):
            return None
        cx, cy = -b / (2 * a), -c / (2 * a)
        r = math.sqrt(max(0.0, (b * b + c * c - 4 * a * d))) / (2 * abs(a))
        return cx, cy, r

    def apex_height(self) -> float:
        """Height of the curve's highest point (inf for non-horizontal lines)."""
        ecr = self.euclidean_center_radius()
        if ecr is None:
            b = float(self.circle.b)
            if abs(b) > EPS:
                return math.inf
            return -float(self.circle.d) / float(self.circle.c)
        cx, cy, r = ecr
        return cy + r

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.circle == other.circle

    def __hash__(self):
        return hash(self.circle)

    def __repr__(self):
        return f"Curve[{self.kind.value}]({self.circle!r})"

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        if not self.exact:
            raise InvalidInputError("only exact curves have a canonical text form")
        a, b, c, d = self.circle.coeffs()
        return f"{self.kind.value} a={a} b={b} c={c} d={d}"

    def to_record(self) -> dict:
        if not self.exact:
            raise InvalidInputError("only exact curves have a canonical record form")
        a, b, c, d = self.circle.coeffs()
        return {"kind": self.kind.value, "a": str(a), "b": str(b), "c": str(c), "d": str(d)}


def curve_from_circle(circle: GeneralizedCircle) -> Curve:
    return Curve(circle)


def curve_from_coeffs(a, b, c, d, exact: Optional[bool] = None) -> Curve:
    return Curve(GeneralizedCircle(a, b, c, d, exact=exact))


def parse_curve_text(text: str) -> Curve:
    parts = text.split()
    if len(parts) != 5:
        raise InvalidInputError(f"bad curve text {text!r}")
    kind_tag = parts[0]
    values = {}
    for part in parts[1:]:
        key, _, raw = part.partition("=")
        values[key] = int(raw)
    curve = curve_from_coeffs(values["a"], values["b"], values["c"], values["d"])
    if curve.kind.value != kind_tag:
        raise InvalidInputError(
            f"curve text tagged {kind_tag} but coefficients classify as {curve.kind.value}"
        )
    return curve


def curve_from_record(record: dict) -> Curve:
    curve = curve_from_coeffs(
        int(record["a"]), int(record["b"]), int(record["c"]), int(record["d"])
    )
    if curve.kind.value != record["kind"]:
        raise InvalidInputError(
            f"record tagged {record['kind']} but classifies as {curve.kind.value}"
        )
    return curve


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def make_geodesic(p: BoundaryPoint, q: BoundaryPoint) -> Curve:
    """The unique geodesic with endpoints p != q."""
    if p == q:
        raise InvalidInputError("geodesic needs two distinct endpoints")
    if p.is_infinity or q.is_infinity:
        finite = q if p.is_infinity else p
        return curve_from_coeffs(0, 1, 0, -finite.value)  # vertical line x = finite
    # semicircle with real-axis roots p, q: x^2 - (p+q)x + pq = 0
    return curve_from_coeffs(1, -(p.value + q.value), 0, p.value * q.value)


def make_horocycle(center: BoundaryPoint, size) -> Curve:
    """Horocycle at `center` of Euclidean radius `size` (line height if center oo)."""
    size = Q(size) if is_rational(size) else size
    if not size > 0:
        raise InvalidInputError("horocycle size must be positive")
    if center.is_infinity:
        if is_rational(size):
            return curve_from_coeffs(0, 0, 1, -size)
        return curve_from_coeffs(0.0, 0.0, 1.0, -float(size), exact=False)
    p = center.value
    if is_rational(size):
        return curve_from_coeffs(1, -2 * p, -2 * size, p * p)
    return curve_from_coeffs(
        1.0, -2.0 * float(p), -2.0 * float(size), float(p) ** 2, exact=False
    )


def make_hypercycle(p: BoundaryPoint, q: BoundaryPoint, through: UHPPoint) -> Curve:
    """The unique hypercycle through boundary points p, q and interior point through."""
    if p == q:
        raise InvalidInputError("hypercycle needs two distinct endpoints")
    if not through.exact:
        return _make_hypercycle_float(p, q, through)
    x0, y0 = through.x, through.y
    if p.is_infinity or q.is_infinity:
        e = (q if p.is_infinity else p).value
        # line through (e, 0) and (x0, y0)
        if x0 == e:
            raise DegenerateResultError(
                "through-point lies on the vertical geodesic",
                make_geodesic(p, q),
            )
        circle = GeneralizedCircle(0, y0, -(x0 - e), -e * y0)
    else:
        b = -(p.value + q.value)
        d = p.value * q.value
        c = -(x0 * x0 + y0 * y0 + b * x0 + d) / y0
        if c == 0:
            raise DegenerateResultError(
                "through-point lies on the spanning geodesic",
                make_geodesic(p, q),
            )
        circle = GeneralizedCircle(1, b, c, d)
    curve = Curve(circle)
    assert curve.kind is CurveKind.HYPERCYCLE
    return curve


def _make_hypercycle_float(p: BoundaryPoint, q: BoundaryPoint, through: UHPPoint) -> Curve:
    x0, y0 = through.as_floats()
    if p.is_infinity or q.is_infinity:
        e = float((q if p.is_infinity else p).value)
        if abs(x0 - e) <= EPS:
            raise DegenerateResultError(
                "through-point lies on the vertical geodesic", make_geodesic(p, q)
            )
        return curve_from_coeffs(0.0, y0, -(x0 - e), -e * y0, exact=False)
    pf, qf = float(p.value), float(q.value)
    b = -(pf + qf)
    d = pf * qf
    c = -(x0 * x0 + y0 * y0 + b * x0 + d) / y0
    if abs(c) <= EPS:
        raise DegenerateResultError(
            "through-point lies on the spanning geodesic", make_geodesic(p, q)
        )
    return curve_from_coeffs(1.0, b, c, d, exact=False)


# ---------------------------------------------------------------------------
# isometries
# ---------------------------------------------------------------------------


class Isometry:
    """Projective 2x2 rational matrix with det > 0, plus an orientation flag.

    Orientation-preserving: z -> (m00 z + m01)/(m10 z + m11).
    Orientation-reversing:  the same Moebius map applied to -conj(z).
    """

    __slots__ = ("m00", "m01", "m10", "m11", "reversing")

    def __init__(self, m00, m01, m10, m11, reversing: bool = False):
        m00, m01, m10, m11 = Q(m00), Q(m01), Q(m10), Q(m11)
        det = m00 * m11 - m01 * m10
        if not det > 0:
            raise InvalidInputError("isometry matrix must have positive determinant")
        # normalize the projective representative: clear denominators,
        # divide by gcd, make the first nonzero entry positive
        lcm = 1
        for v in (m00, m01, m10, m11):
            lcm = lcm * denom(v) // math.gcd(lcm, denom(v))
        ints = [numer(v * lcm) for v in (m00, m01, m10, m11)]
        g = _gcd_all([abs(v) for v in ints])
        if g > 1:
            ints = [v // g for v in ints]
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
        self.m00, self.m01, self.m10, self.m11 = (Q(v) for v in ints)
        self.reversing = bool(reversing)

    # -- group structure ---------------------------------------------------

    @staticmethod
    def identity() -> "Isometry":
        return Isometry(1, 0, 0, 1)

    @staticmethod
    def translation(t) -> "Isometry":
        return Isometry(1, t, 0, 1)

    @staticmethod
    def scaling(s) -> "Isometry":
        if not Q(s) > 0:
            raise InvalidInputError("scaling factor must be positive")
        return Isometry(s, 0, 0, 1)

    @staticmethod
    def reflection(axis_x=0) -> "Isometry":
        """Reflection across the vertical line x = axis_x: z -> -conj(z) + 2 axis_x."""
        return Isometry(1, 2 * Q(axis_x), 0, 1, reversing=True)

    def det(self):
        return self.m00 * self.m11 - self.m01 * self.m10

    def matrix(self):
        return (self.m00, self.m01, self.m10, self.m11)

    def _twisted(self):
        # sigma . M = twist(M) . sigma with sigma(z) = -conj(z)
        return (self.m00, -self.m01, -self.m10, self.m11)

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other: (self.compose(other))(z) = self(other(z))."""
        a, b, c, d = self.matrix()
        e, f, g, h = other._twisted() if self.reversing else other.matrix()
        return Isometry(
            a * e + b * g,
            a * f + b * h,
            c * e + d * g,
            c * f + d * h,
            reversing=self.reversing ^ other.reversing,
        )

    def __matmul__(self, other):
        return self.compose(other)

    def inverse(self) -> "Isometry":
        a, b, c, d = self.matrix()
        inv = (d, -b, -c, a)
        if self.reversing:
            m = Isometry(*inv)
            return Isometry(*m._twisted(), reversing=True)
        return Isometry(*inv)

    def __eq__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.reversing == other.reversing and self.matrix() == other.matrix()

    def __hash__(self):
        return hash(("iso", self.matrix(), self.reversing))

    def __repr__(self):
        tag = "-" if self.reversing else "+"
        return "Isometry{}[{} {}; {} {}]".format(
            tag, *(q_str(v) for v in self.matrix())
        )

    # -- actions -----------------------------------------------------------

    def apply_boundary(self, p: BoundaryPoint) -> BoundaryPoint:
        a, b, c, d = self.matrix()
        if p.is_infinity:
            return INFINITY if c == 0 else BoundaryPoint.finite(a / c)
        x = -p.value if self.reversing else p.value
        den_ = c * x + d
        if den_ == 0:
            return INFINITY
        return BoundaryPoint.finite((a * x + b) / den_)

    def apply_point(self, z: UHPPoint) -> UHPPoint:
        a, b, c, d = self.matrix()
        x, y = z.x, z.y
        if self.reversing:
            x = -x
        if z.exact:
            den_ = (c * x + d) ** 2 + c * c * y * y
            nx = (a * c * (x * x + y * y) + (a * d + b * c) * x + b * d) / den_
            ny = (a * d - b * c) * y / den_
            return UHPPoint(nx, ny)
        af, bf, cf, df = (float(v) for v in (a, b, c, d))
        xf, yf = float(x), float(y)
        den_ = (cf * xf + df) ** 2 + cf * cf * yf * yf
        nx = (af * cf * (xf * xf + yf * yf) + (af * df + bf * cf) * xf + bf * df) / den_
        ny = (af * df - bf * cf) * yf / den_
        return UHPPoint(nx, ny, exact=False)

    def apply_circle(self, circle: GeneralizedCircle) -> GeneralizedCircle:
        a, b, c, d = circle.coeffs()
        if self.reversing:
            b = -b  # sigma: x -> -x
        # pull back along the inverse Moebius map (p w + q)/(r w + s)
        m00, m01, m10, m11 = self.matrix()
        p, q, r, s = m11, -m01, -m10, m00
        if not circle.exact:
            a, b, c, d = float(a), float(b), float(c), float(d)
            p, q, r, s = (float(v) for v in (p, q, r, s))
        na = a * p * p + b * p * r + d * r * r
        nb = 2 * a * p * q + b * (p * s + q * r) + 2 * d * r * s
        nc = c * (p * s - q * r)
        nd = a * q * q + b * q * s + d * s * s
        return GeneralizedCircle(na, nb, nc, nd, exact=circle.exact)

    def apply_curve(self, curve: Curve) -> Curve:
        image = Curve(self.apply_circle(curve.circle))
        assert image.kind is curve.kind, "isometries preserve curve kind"
        return image


def apply_isometry(iso: Isometry, target):
    """Apply `iso` to a point, boundary point, curve, or generalized circle."""
    if isinstance(target, UHPPoint):
        return iso.apply_point(target)
    if isinstance(target, BoundaryPoint):
        return iso.apply_boundary(target)
    if isinstance(target, Curve):
        return iso.apply_curve(target)
    if isinstance(target, GeneralizedCircle):
        return iso.apply_circle(target)
    raise InvalidInputError(f"cannot apply isometry to {type(target).__name__}")


# ---------------------------------------------------------------------------
# normalizers
# ---------------------------------------------------------------------------


def two_point_normalizer(x: BoundaryPoint, y: BoundaryPoint) -> Isometry:
    """Orientation-preserving isometry phi with phi(x) = oo and phi(y) = 0.

    For finite x, y this is z -> -1/(z-x) + 1/(y-x), the sign-corrected form
    of the naive 1/(z-x) - 1/(y-x) (which has negative determinant and maps
    the upper half-plane to the lower one).
    """
    if x == y:
        raise InvalidInputError("normalizer needs two distinct boundary points")
    if x.is_infinity:
        return Isometry.translation(-y.value)  # z -> z - y
    if y.is_infinity:
        return Isometry(0, -1, 1, -x.value)  # z -> -1/(z - x)
    k = 1 / (y.value - x.value)
    return Isometry(k, -1 - k * x.value, 1, -x.value)


def _std_triple_matrix(t):
    """Matrix sending the triple t to (0, 1, oo); entries rational."""
    s0, s1, s2 = t
    if s0.is_infinity:
        return (Q(0), s1.value - s2.value, Q(1), -s2.value)
    if s1.is_infinity:
        return (Q(1), -s0.value, Q(1), -s2.value)
    if s2.is_infinity:
        return (Q(1), -s0.value, Q(0), s1.value - s0.value)
    return (
        s1.value - s2.value,
        -s0.value * (s1.value - s2.value),
        s1.value - s0.value,
        -s2.value * (s1.value - s0.value),
    )


def triple_normalizer(src, dst) -> Isometry:
    """The unique isometry mapping the src triple pointwise to the dst triple.

    Orientation-preserving when the triples have the same cyclic orientation,
    reversing otherwise.
    """
    src, dst = tuple(src), tuple(dst)
    if len(set(src)) != 3 or len(set(dst)) != 3:
        raise InvalidInputError("triples must consist of three distinct points")
    ms = _std_triple_matrix(src)
    md = _std_triple_matrix(dst)
    # M = md^-1 . ms
    a, b, c, d = md
    inv = (d, -b, -c, a)
    e, f, g, h = ms
    m = (
        inv[0] * e + inv[1] * g,
        inv[0] * f + inv[1] * h,
        inv[2] * e + inv[3] * g,
        inv[2] * f + inv[3] * h,
    )
    det = m[0] * m[3] - m[1] * m[2]
    if det > 0:
        iso = Isometry(*m)
    else:
        # the pointwise map is orientation-reversing: precompose with x -> -x
        # by negating the first matrix column
        iso = Isometry(-m[0], m[1], -m[2], m[3], reversing=True)
    for s, t in zip(src, dst):
        assert iso.apply_boundary(s) == t
    return iso


# ---------------------------------------------------------------------------
# distance machinery
# ---------------------------------------------------------------------------


def distance_to_geodesic(z: UHPPoint, g: Curve) -> float:
    """Hyperbolic distance from z to the geodesic g: arcsinh(|x|/y) after
    normalizing g to the imaginary axis."""
    if g.kind is not CurveKind.GEODESIC:
        raise InvalidInputError("distance_to_geodesic needs a geodesic")
    p, q = g.endpoints
    iso = _geodesic_to_axis(p, q)
    w = iso.apply_point(z)
    return math.asinh(abs(float(w.x)) / float(w.y))


def _geodesic_to_axis(p: BoundaryPoint, q: BoundaryPoint) -> Isometry:
    """Isometry sending the geodesic (p, q) to the imaginary axis (0, oo)."""
    if q.is_infinity:
        return Isometry.translation(-p.value)
    if p.is_infinity:
        return Isometry.translation(-q.value)
    # z -> (z - p)/(q - z): p -> 0, q -> oo; det = q - p
    if q.value > p.value:
        return Isometry(1, -p.value, -1, q.value)
    return Isometry(1, -q.value, -1, p.value)


def equidistant_pair(g: Curve, d, sinh_d=None):
    """The two hypercycles at hyperbolic distance d from the geodesic g.

    The pair bounds the distance-d crescent around g.  Pass `sinh_d` as an
    exact rational to get exact output curves; otherwise sinh(d) is taken as
    the exact rational value of the float.  d = 0 returns (g, g).
    """
    if g.kind is not CurveKind.GEODESIC:
        raise InvalidInputError("equidistant_pair needs a geodesic")
    if sinh_d is None:
        if not d > 0:
            if d == 0:
                return (g, g)
            raise InvalidInputError("distance must be nonnegative")
        sinh_d = Q(Fraction(math.sinh(d)))
    else:
        sinh_d = Q(sinh_d)
        if sinh_d == 0:
            return (g, g)
        if sinh_d < 0:
            raise InvalidInputError("sinh of the distance must be positive")
    a, b, _, d0 = g.circle.coeffs()
    disc = b * b - 4 * a * d0
    root = isqrt_exact(disc)
    assert root is not None, "geodesics with exact endpoints have square disc"
    shift = sinh_d * root
    plus = curve_from_coeffs(a, b, shift, d0)
    minus = curve_from_coeffs(a, b, -shift, d0)
    assert plus.kind is CurveKind.HYPERCYCLE and minus.kind is CurveKind.HYPERCYCLE
    return (minus, plus)


# ---------------------------------------------------------------------------
# rational points on exact curves
# ---------------------------------------------------------------------------


def _base_boundary_point(curve: Curve):
    """A rational point of the full circle lying on the real axis."""
    a, b, c, d = curve.circle.coeffs()
    if a == 0:
        return None  # line: sampled directly
    if curve.kind is CurveKind.HOROCYCLE:
        return Q(-b, 2 * a)
    if not curve.has_exact_endpoints:
        raise InvalidInputError("cannot sample rational points: irrational endpoints")
    e = curve.endpoints[0]
    return e.value


def rational_points(curve: Curve, count: int):
    """`count` exact rational points on the curve (y > 0), deterministic.

    Points come from the pencil of rational-slope chords through a rational
    base point of the carrier circle.
    """
    if not curve.exact:
        raise InvalidInputError("rational sampling needs an exact curve")
    a, b, c, d = (Q(v) for v in curve.circle.coeffs())
    points = []
    if a == 0:
        # line b x + c y + d = 0
        if c == 0:
            k = 1
            while len(points) < count:
                points.append(UHPPoint(-d / b, Q(k)))
                k += 1
            return points
        t = 1
        while len(points) < count:
            for x in (Q(t), Q(-t), Q(1, t + 1), Q(-1, t + 1)):
                y = -(b * x + d) / c
                if y > 0:
                    points.append(UHPPoint(x, y))
                    if len(points) >= count:
                        break
            t += 1
        return points
    x0 = _base_boundary_point(curve)
    # chord of slope t through (x0, 0); the second intersection is rational.
    # Slopes +-p/q are enumerated over all coprime pairs with max(p, q) = k
    # so the sample set is dense in every sub-arc as count grows.
    k = 1
    while len(points) < count:
        slopes = []
        for den in range(1, k + 1):
            if math.gcd(k, den) != 1:
                continue
            slopes.extend((Q(k, den), Q(-k, den)))
            if den != k:
                slopes.extend((Q(den, k), Q(-den, k)))
        for t in slopes:
            u = -(2 * a * x0 + b + c * t) / (a * (1 + t * t))
            if u == 0:
                continue
            x, y = x0 + u, t * u
            if y > 0:
                pt = UHPPoint(x, y)
                if pt not in points:
                    points.append(pt)
                    if len(points) >= count:
                        break
        k += 1
        if k > 40 * count + 40:
            raise InvalidInputError("could not find enough rational points")
    return points
