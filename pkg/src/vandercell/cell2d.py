"""Explicit geometry of the planar cells ``(p_2, p_3)(simplex)`` and their limit.

For ``n`` variables the boundary consists of ``n - 1`` lower arcs
``L_k(t) = (k t^2 + (1-kt)^2, k t^3 + (1-kt)^3)`` on ``[1/(k+1), 1/k]`` and
one upper arc, the same formula with ``k = n - 1`` on ``[0, 1/n]``.  The
limit cell keeps every lower arc and replaces the upper arc by
``(u^2, u^3)``, i.e. ``b = a^(3/2)``.

Memberships and fiber bounds for rational input are decided exactly: the
arc parameter solving ``p_2 = a`` lies in ``Q(sqrt(D))`` for a rational
``D``, and signs in that field are computed without rounding.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

import numpy as np
from scipy.special import zeta

from .symcore import CellPoint

Number = Union[Fraction, float]


@dataclass(frozen=True)
class FiniteN:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be >= 3")


@dataclass(frozen=True)
class Limit:
    pass


LIMIT = Limit()
Domain = Union[FiniteN, Limit]


class ArcKind(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"
    UPPER_LIMIT = "upper_limit"


@dataclass(frozen=True)
class Arc:
    """``Arc(LOWER, k)``, ``Arc(UPPER, n)`` or ``Arc(UPPER_LIMIT)``."""

    kind: ArcKind
    index: int = 0

    @classmethod
    def lower(cls, k: int) -> "Arc":
        if k < 1:
            raise ValueError("lower arc index must be >= 1")
        return cls(ArcKind.LOWER, k)

    @classmethod
    def upper(cls, n: int) -> "Arc":
        if n < 2:
            raise ValueError("upper arc needs n >= 2")
        return cls(ArcKind.UPPER, n)

    @classmethod
    def upper_limit(cls) -> "Arc":
        return cls(ArcKind.UPPER_LIMIT, 0)

    @property
    def label(self) -> str:
        if self.kind is ArcKind.LOWER:
            return f"L{self.index}"
        if self.kind is ArcKind.UPPER:
            return f"U{self.index - 1}"
        return "U_inf"

    @property
    def curve_index(self) -> int:
        """The ``k`` in the common formula ``(k t^2 + (1-kt)^2, k t^3 + (1-kt)^3)``."""
        return self.index if self.kind is ArcKind.LOWER else self.index - 1

    def domain(self) -> Tuple[Fraction, Fraction]:
        if self.kind is ArcKind.LOWER:
            return Fraction(1, self.index + 1), Fraction(1, self.index)
        if self.kind is ArcKind.UPPER:
            return Fraction(0), Fraction(1, self.index)
        return Fraction(0), Fraction(1)


def boundary_arcs(n: int) -> List[Arc]:
    """Lower arcs ``L_{n-1}, ..., L_1`` then the upper arc: one closed loop."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return [Arc.lower(k) for k in range(n - 1, 0, -1)] + [Arc.upper(n)]


def _curve(k, t):
    s = 1 - k * t
    return k * t * t + s * s, k * t**3 + s**3


def _exact_sqrt(q: Fraction):
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def arc_eval(arc: Arc, t) -> CellPoint:
    """Point of ``arc`` at parameter ``t`` (exact for rational ``t``).

    The limit upper arc is ``(t, t^(3/2))``; it stays exact when ``t`` is a
    rational square and falls back to floating point otherwise.
    """
    lo, hi = arc.domain()
    if not lo <= t <= hi:
        raise ValueError(f"t={t} outside the domain [{lo}, {hi}] of {arc.label}")
    if arc.kind is ArcKind.UPPER_LIMIT:
        if isinstance(t, (int, Fraction)):
            u = _exact_sqrt(Fraction(t))
            if u is not None:
                return (u * u, u**3)
        t = float(t)
        return (t, t**1.5)
    if isinstance(t, int):
        t = Fraction(t)
    return _curve(arc.curve_index, t)


def arc_eval_limit_u(u) -> CellPoint:
    """Limit upper arc in the polynomial parameter ``u = sqrt(t)``."""
    if not 0 <= u <= 1:
        raise ValueError("u must lie in [0, 1]")
    return (u * u, u**3)


def arc_slope(arc: Arc, t):
    """``dp_3/dp_2`` along the arc, extended continuously to the endpoints.

    Both derivatives of ``L_k`` share the factor ``(k+1)t - 1``; cancelling
    it leaves ``(3/2)(1 - (k-1)t)``.
    """
    lo, hi = arc.domain()
    if arc.kind is ArcKind.UPPER_LIMIT:
        # b = a^(3/2) has slope (3/2) sqrt(a)
        if not lo < t <= hi:
            raise ValueError("slope of the limit arc needs t in (0, 1]")
        root = None if isinstance(t, float) else _exact_sqrt(Fraction(t))
        return Fraction(3, 2) * root if root is not None else 1.5 * math.sqrt(t)
    if not lo <= t <= hi:
        raise ValueError(f"t={t} outside the domain of {arc.label}")
    k = arc.curve_index
    if isinstance(t, float):
        return 1.5 * (1 - (k - 1) * t)
    return Fraction(3, 2) * (1 - (k - 1) * Fraction(t))


# -- exact arithmetic in Q(sqrt(D)) -----------------------------------------


@dataclass(frozen=True)
class Surd:
    """``x + y * sqrt(D)`` with rational ``x, y`` and fixed ``D >= 0``."""

    x: Fraction
    y: Fraction
    D: Fraction

    def __add__(self, other):
        if isinstance(other, Surd):
            return Surd(self.x + other.x, self.y + other.y, self.D)
        return Surd(self.x + other, self.y, self.D)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.x, -self.y, self.D)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Surd):
            return Surd(self.x * other.x + self.y * other.y * self.D, self.x * other.y + self.y * other.x, self.D)
        return Surd(self.x * other, self.y * other, self.D)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Surd(Fraction(1), Fraction(0), self.D)
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        sx = (self.x > 0) - (self.x < 0)
        sy = (self.y > 0) - (self.y < 0)
        if self.D == 0 or sy == 0:
            return sx
        if sx == 0 or sx == sy:
            return sy
        # opposite signs: compare x^2 with y^2 D
        diff = self.x * self.x - self.y * self.y * self.D
        return sx if diff > 0 else (0 if diff == 0 else sy)

    def __float__(self):
        return float(self.x) + float(self.y) * math.sqrt(self.D)

    def exact(self):
        """The value as a ``Fraction`` when ``D`` is a rational square, else ``None``."""
        r = _exact_sqrt(self.D)
        return None if r is None else self.x + self.y * r


def _branch_parameter(k: int, a, increasing: bool):
    """Solve ``k t^2 + (1-kt)^2 = a`` on the increasing or decreasing branch."""
    D = k * (k + 1) * a - k
    sign = 1 if increasing else -1
    scale = Fraction(1, k * (k + 1))
    if isinstance(a, float):
        return (k + sign * math.sqrt(max(D, 0.0))) / (k * (k + 1))
    return Surd(k * scale, sign * scale, Fraction(D))


def _cubic_at(k: int, t):
    s = 1 - k * t
    return k * t * t * t + s * s * s


def lower_arc_index(a, domain: Domain) -> int:
    """Arc ``k`` with ``a`` in ``[1/(k+1), 1/k]``; at ``a = 1/j`` the arc starting there."""
    if a <= 0:
        raise ValueError("a must be positive")
    k = math.floor(1 / a)
    if 1 / a == k:
        k -= 1
    k = max(k, 1)
    if isinstance(domain, FiniteN):
        k = min(k, domain.n - 1)
    return k


def _lower_bound(a, domain: Domain):
    k = lower_arc_index(a, domain)
    return _cubic_at(k, _branch_parameter(k, a, increasing=True))


def _upper_bound(a, domain: Domain):
    if isinstance(domain, Limit):
        return None  # handled by b^2 versus a^3
    m = domain.n - 1
    return _cubic_at(m, _branch_parameter(m, a, increasing=False))


class Membership(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _as_number(v):
    if isinstance(v, bool):
        raise TypeError("boolean coordinate")
    if isinstance(v, float):
        if math.isnan(v):
            raise ValueError("NaN coordinate")
        return v
    return Fraction(v)


def _cmp(value, bound, tol):
    """Sign of ``value - bound``; ``bound`` may be a Surd or a float."""
    if isinstance(bound, Surd) and not isinstance(value, float):
        return (Fraction(value) - bound).sign()
    diff = float(value) - float(bound)
    if abs(diff) <= tol:
        return 0
    return 1 if diff > 0 else -1


def membership(q, domain: Domain, tol: float = 1e-9) -> Membership:
    """Classify ``q = (a, b)`` against the cell; rational input is decided exactly."""
    if len(q) != 2:
        raise ValueError("membership is only available for planar points")
    a, b = (_as_number(v) for v in q)
    if a < 0 or b < 0:
        raise ValueError("coordinates must be nonnegative")
    floating = isinstance(a, float) or isinstance(b, float)
    if floating:
        a, b = float(a), float(b)
    if isinstance(domain, FiniteN):
        lo = Fraction(1, domain.n)
        if floating:
            if a < float(lo) - tol or a > 1 + tol:
                return Membership.OUTSIDE
            a = min(max(a, float(lo)), 1.0)
        elif not lo <= a <= 1:
            return Membership.OUTSIDE
    else:
        if a > 1 + (tol if floating else 0):
            return Membership.OUTSIDE
        if floating:
            a = min(a, 1.0)
        if a == 0 or (floating and a <= tol):
            return Membership.BOUNDARY if abs(b) <= (tol if floating else 0) else Membership.OUTSIDE

    low = _lower_bound(a, domain)
    c_low = _cmp(b, low, tol)
    if isinstance(domain, Limit):
        if floating:
            up = a**1.5
            c_up = _cmp(b, up, tol)
        else:
            diff = b * b - a**3
            c_up = (diff > 0) - (diff < 0)
    else:
        c_up = _cmp(b, _upper_bound(a, domain), tol)
    if c_low < 0 or c_up > 0:
        return Membership.OUTSIDE
    if c_low == 0 or c_up == 0:
        return Membership.BOUNDARY
    return Membership.INSIDE


def _resolve(v):
    if isinstance(v, Surd):
        exact = v.exact()
        return exact if exact is not None else float(v)
    return v


def fiber_interval(a, domain: Domain) -> Tuple[Number, Number]:
    """``[min p_3, max p_3]`` over the cell at ``p_2 = a``.

    Endpoints are ``Fraction`` when they are rational and ``float`` when the
    inversion involves an irrational square root.
    """
    a = _as_number(a)
    if isinstance(domain, FiniteN):
        if not Fraction(1, domain.n) <= a <= 1:
            raise ValueError(f"a must lie in [1/{domain.n}, 1]")
    elif not 0 < a <= 1:
        raise ValueError("a must lie in (0, 1]")
    low = _resolve(_lower_bound(a, domain))
    if isinstance(domain, Limit):
        up = (_exact_sqrt(a) ** 3 if not isinstance(a, float) and _exact_sqrt(a) is not None else float(a) ** 1.5)
    else:
        up = _resolve(_upper_bound(a, domain))
    return low, up


# -- area ----------------------------------------------------------------------


class AreaMode(enum.Enum):
    CLOSED_FORM = "closed"
    GREEN = "green"


def area_closed_form(domain: Domain):
    if isinstance(domain, FiniteN):
        return Fraction(1, 10) * sum((Fraction(1, k * k) - Fraction(1, k**3) for k in range(2, domain.n)), Fraction(0))
    return float(zeta(2) - zeta(3)) / 10


def _green_arc(k: int, t0: float, t1: float, nodes: np.ndarray, weights: np.ndarray) -> float:
    # 1/2 * integral of (x y' - y x') dt for the curve with index k
    half = 0.5 * (t1 - t0)
    t = t0 + half * (nodes + 1)
    s = 1 - k * t
    x = k * t * t + s * s
    y = k * t**3 + s**3
    dx = 2 * k * t - 2 * k * s
    dy = 3 * k * t * t - 3 * k * s * s
    return 0.5 * half * float(np.dot(weights, x * dy - y * dx))


def area_green(domain: Domain, quad_nodes: int = 16, limit_terms: int = 2000) -> float:
    """Area from Green's theorem along the boundary parametrisations.

    For the limit cell the lower arcs ``L_1 .. L_K`` are integrated, the gap
    to the origin is closed by a chord (error below ``1/K^3``) and the upper
    arc is ``(u^2, u^3)``.
    """
    nodes, weights = np.polynomial.legendre.leggauss(quad_nodes)
    if isinstance(domain, FiniteN):
        total = 0.0
        for arc in boundary_arcs(domain.n):
            lo, hi = arc.domain()
            total += _green_arc(arc.curve_index, float(lo), float(hi), nodes, weights)
        return abs(total)
    K = limit_terms
    total = sum(_green_arc(k, 1.0 / (k + 1), 1.0 / k, nodes, weights) for k in range(K, 0, -1))
    # upper arc from (1,1) back to the origin: x = u^2, y = u^3, x y' - y x' = u^4
    half = 0.5
    u = half * (nodes + 1)
    total -= 0.5 * half * float(np.dot(weights, u**4))
    # chord from the origin to (1/(K+1), 1/(K+1)^2) contributes x y' - y x' = 0
    return abs(total)


def area(domain: Domain, mode: AreaMode = AreaMode.CLOSED_FORM):
    if mode is AreaMode.CLOSED_FORM:
        return area_closed_form(domain)
    return area_green(domain)


# -- singular points -------------------------------------------------------------


class SingularKind(enum.Enum):
    CORNER = "corner"
    CUSP = "cusp"


@dataclass(frozen=True)
class SingularPoint:
    """A non-smooth boundary point with the slopes of its two incident arcs.

    For a corner ``left_slope``/``right_slope`` belong to the arcs on the
    smaller/larger ``p_2`` side; at a cusp both arcs arrive from the same
    side and the slopes are listed as (lower arc, upper arc).
    """

    point: CellPoint
    k: int
    left_slope: Fraction
    right_slope: Fraction
    kind: SingularKind


def singular_points(n: int) -> List[SingularPoint]:
    """The points ``(1/k, 1/k^2)``, ``k = 1..n``, in order of ``k``."""
    if n < 3:
        raise ValueError("n must be >= 3")
    upper = Arc.upper(n)
    out = []
    for k in range(1, n + 1):
        point = (Fraction(1, k), Fraction(1, k * k))
        if k == 1:
            slopes = (arc_slope(Arc.lower(1), Fraction(1)), arc_slope(upper, Fraction(0)))
        elif k == n:
            slopes = (arc_slope(Arc.lower(n - 1), Fraction(1, n)), arc_slope(upper, Fraction(1, n)))
        else:
            slopes = (arc_slope(Arc.lower(k), Fraction(1, k)), arc_slope(Arc.lower(k - 1), Fraction(1, k)))
        endpoint = k in (1, n)
        # at the extreme points both arcs share the tangent and meet from one side
        kind = SingularKind.CUSP if endpoint and slopes[0] == slopes[1] else SingularKind.CORNER
        out.append(SingularPoint(point, k, slopes[0], slopes[1], kind))
    return out
