"""Finite test sets for copositivity of symmetric forms.

A hook-shaped form ``c_0 e_1^d + sum_j c_j e_1^(d-j) e_j`` restricted to
``e_1 = 1`` is affine in ``(e_2, ..., e_d)``, so it is nonnegative on the
simplex exactly when it is nonnegative at the images of the uniform points
``(1/k, ..., 1/k, 0, ..., 0)``.  The same holds for the even sextics
``a p_2^3 + b p_4 p_2 + c p_6`` with test points ``(1, 1/k, 1/k^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, floor
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from .symcore import Basis, SymmetricPolynomial


@dataclass(frozen=True)
class Copositive:
    tested: int = 0

    @property
    def holds(self) -> bool:
        return True


@dataclass(frozen=True)
class NotCopositive:
    k: int
    value: Fraction

    @property
    def holds(self) -> bool:
        return False


Decision = Union[Copositive, NotCopositive]


@dataclass(frozen=True)
class AllN:
    pass


ALL_N = AllN()


@dataclass(frozen=True)
class FiniteN:
    n: int


@dataclass(frozen=True)
class HookPolynomial:
    """``coeffs[j]`` multiplies ``e_1^(d-j) e_j`` for ``j`` in ``{0, 2, ..., d}``."""

    d: int
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 3:
            raise ValueError("hook polynomials need d >= 3")
        clean = {}
        for j, c in self.coeffs.items():
            if j == 1 or not 0 <= j <= self.d:
                raise ValueError(f"coefficient index {j} not in {{0, 2, ..., d}}")
            c = Fraction(c)
            if c:
                clean[j] = c
        if not clean:
            raise ValueError("at least one coefficient must be nonzero")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_list(cls, values: Sequence, d: int) -> "HookPolynomial":
        """Positional coefficients of ``e_1^(d-j) e_j`` for ``j = 0..d``.

        ``e_1^(d-1) e_1`` equals ``e_1^d``, so a ``j = 1`` entry is folded into
        ``c_0``.  ``[1, 0, -4]`` with ``d = 3`` is ``e_1^3 - 4 e_1 e_2``.
        """
        values = [Fraction(v) for v in values]
        if len(values) > d + 1:
            raise ValueError("more coefficients than degree allows")
        coeffs: Dict[int, Fraction] = {}
        for j, v in enumerate(values):
            key = 0 if j == 1 else j
            coeffs[key] = coeffs.get(key, Fraction(0)) + v
        return cls(d, coeffs)

    def to_symmetric(self) -> SymmetricPolynomial:
        e1 = SymmetricPolynomial.symbol(1, Basis.ELEMENTARY)
        total = SymmetricPolynomial.constant(0, Basis.ELEMENTARY)
        for j, c in self.coeffs.items():
            term = e1 ** (self.d - j) * c
            if j:
                term = term * SymmetricPolynomial.symbol(j, Basis.ELEMENTARY)
            total = total + term
        return total

    def limit_value(self) -> Fraction:
        """Value at the accumulation point ``(1/2!, ..., 1/d!)`` of the test set."""
        return self.coeffs.get(0, Fraction(0)) + sum(
            (c / factorial(j) for j, c in self.coeffs.items() if j), Fraction(0)
        )


def hook_test_value(f: HookPolynomial, k: int) -> Fraction:
    if k < 1:
        raise ValueError("k must be >= 1")
    return f.coeffs.get(0, Fraction(0)) + sum(
        (c * Fraction(comb(k, j), k**j) for j, c in f.coeffs.items() if j), Fraction(0)
    )


def hook_copositive(f: HookPolynomial, n: int) -> Decision:
    if n < f.d:
        raise ValueError(f"the test set needs n >= d (got n={n}, d={f.d})")
    for k in range(1, n + 1):
        v = hook_test_value(f, k)
        if v < 0:
            return NotCopositive(k, v)
    return Copositive(tested=n)


def _falling_poly(j: int) -> List[Fraction]:
    """Coefficients (ascending) of ``k (k-1) ... (k-j+1) / j!``."""
    poly = [Fraction(1)]
    for i in range(j):
        nxt = [Fraction(0)] * (len(poly) + 1)
        for e, c in enumerate(poly):
            nxt[e + 1] += c
            nxt[e] -= i * c
        poly = nxt
    return [c / factorial(j) for c in poly]


def _poly_eval(coeffs: Sequence[Fraction], x) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def _trim(coeffs: List[Fraction]) -> List[Fraction]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def cauchy_bound(coeffs: Sequence[Fraction]) -> Fraction:
    """Every real root satisfies ``|x| <= 1 + max |a_i / a_lead|``."""
    coeffs = _trim(list(coeffs))
    if len(coeffs) <= 1:
        return Fraction(0)
    lead = coeffs[-1]
    return 1 + max(abs(c / lead) for c in coeffs[:-1])


def _all_k_decision(values_poly: List[Fraction], value_at, limit: Fraction) -> Decision:
    """Decide ``value_at(k) >= 0`` for every integer ``k >= 1``.

    ``values_poly`` is a polynomial in ``k`` with the same sign as
    ``value_at(k)`` for ``k >= 1``; past its Cauchy bound that sign is the
    sign of the leading coefficient, which equals the sign of the limit
    value whenever the latter is nonzero.
    """
    poly = _trim(values_poly)
    bound = floor(cauchy_bound(poly)) + 1 if poly else 1
    for k in range(1, bound + 1):
        v = value_at(k)
        if v < 0:
            return NotCopositive(k, v)
    # k = bound exceeds every real root, so the tail has the sign of the
    # leading coefficient, which the loop has just seen to be nonnegative
    if limit < 0:
        raise AssertionError("limit value negative although tail is nonnegative")
    return Copositive(tested=bound)


def hook_copositive_all_n(f: HookPolynomial) -> Decision:
    """Copositivity in every number of variables.

    ``k^(d-1) * v(k)`` is a polynomial in ``k`` (``C(k, j)/k^j`` has
    denominator ``k^(j-1)``), so finitely many exact tests plus the sign of
    the leading coefficient settle all ``k``.
    """
    d = f.d
    # P(k) = k^(d-1) v(k) = c0 k^(d-1) + sum_j c_j C(k, j) k^(d-1-j)
    P = [Fraction(0)] * (d + 1)
    P[d - 1] += f.coeffs.get(0, Fraction(0))
    for j, c in f.coeffs.items():
        if not j:
            continue
        for e, a in enumerate(_falling_poly(j)):
            # C(k, j) has no constant term, so e >= 1 and e - 1 + (d - j) >= 0
            if a:
                P[e - 1 + d - j] += c * a
    return _all_k_decision(P, lambda k: hook_test_value(f, k), f.limit_value())


@dataclass(frozen=True)
class SexticCoeffs:
    """``a p_2^3 + b p_4 p_2 + c p_6``."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def test_value(self, k: int) -> Fraction:
        """Value at ``(p_2, p_4, p_6) = (1, 1/k, 1/k^2)``."""
        if k < 1:
            raise ValueError("k must be >= 1")
        return self.a + self.b / k + self.c / (k * k)

    def to_symmetric(self) -> SymmetricPolynomial:
        p = lambda j: SymmetricPolynomial.symbol(j, Basis.POWER)
        return p(2) ** 3 * self.a + p(4) * p(2) * self.b + p(6) * self.c


def clr_sextic(s: SexticCoeffs, domain: Union[FiniteN, AllN] = ALL_N) -> Decision:
    """Nonnegativity of an even symmetric sextic from its test values."""
    if isinstance(domain, FiniteN):
        if domain.n < 3:
            raise ValueError("the sextic test set needs n >= 3")
        for k in range(1, domain.n + 1):
            v = s.test_value(k)
            if v < 0:
                return NotCopositive(k, v)
        return Copositive(tested=domain.n)
    # k^2 v(k) = a k^2 + b k + c
    return _all_k_decision([s.c, s.b, s.a], s.test_value, s.a)


# -- power sums: the test set is not enough -----------------------------------


def power_sum_test_value(k: int) -> Fraction:
    """``2 p_4 - 3 p_3 p_1 + p_2 p_1^2`` at ``(p_1, ..., p_4) = (1, 1/k, 1/k^2, 1/k^3)``."""
    return 2 * Fraction(1, k**3) - 3 * Fraction(1, k**2) + Fraction(1, k)


def g_m(m: int, t: int) -> int:
    """The quartic at ``(t, 1, ..., 1)`` with ``m`` ones, as a polynomial in ``t``."""
    return -m * t**3 + (m * m + m) * t * t + (2 * m * m - 3 * m) * t + m**3 - 3 * m * m + 2 * m


def power_sum_quartic() -> SymmetricPolynomial:
    p = lambda j: SymmetricPolynomial.symbol(j, Basis.POWER)
    return p(4) * 2 - p(3) * p(1) * 3 + p(2) * p(1) ** 2


@dataclass(frozen=True)
class PowerSumCounterexample:
    test_values: Tuple[Fraction, ...]
    all_nonnegative: bool
    m: int
    t: int
    value: int
    point: Tuple[int, ...]
    direct_value: Fraction
    normalized_value: Fraction


def power_sum_testset_counterexample(max_k: int = 1000, m: int = 2, max_t: int = 1000) -> PowerSumCounterexample:
    """Nonnegative on every test point, yet negative at ``(t, 1, ..., 1)``."""
    values = tuple(power_sum_test_value(k) for k in range(1, max_k + 1))
    for t in range(1, max_t + 1):
        if g_m(m, t) < 0:
            break
    else:
        raise RuntimeError(f"no negative value of g_{m} on t <= {max_t}")
    point = (t,) + (1,) * m
    f = power_sum_quartic()
    direct = f.at_vector(point)
    # the same sign on the simplex after dividing by p_1^4
    normalized = direct / Fraction(sum(point)) ** 4
    return PowerSumCounterexample(
        test_values=values,
        all_nonnegative=all(v >= 0 for v in values),
        m=m,
        t=t,
        value=g_m(m, t),
        point=point,
        direct_value=direct,
        normalized_value=normalized,
    )
