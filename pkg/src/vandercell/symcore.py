"""Exact symmetric-function arithmetic.

Points of the (sub-)probability simplex are stored compressed, as distinct
positive values with multiplicities plus a count of zeros.  Symmetric
polynomials are sparse polynomials in either the power sums ``p_k`` or the
elementary symmetric polynomials ``e_k``; Newton's identities convert
between the two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence, Tuple

from . import polyalg

CellPoint = Tuple[Fraction, ...]


def format_rational(q) -> str:
    """Serialize a rational as ``"num/den"`` (integers print without ``/1``)."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class CompressedPoint:
    """A nonnegative vector up to permutation.

    ``entries`` holds ``(value, multiplicity)`` pairs with strictly increasing
    positive values.  Use :meth:`from_entries` or :meth:`from_coords` to get
    the canonical form.
    """

    zero_count: int
    entries: Tuple[Tuple[Fraction, int], ...]

    def __post_init__(self):
        if self.zero_count < 0:
            raise ValueError("zero_count must be nonnegative")
        prev = None
        for v, m in self.entries:
            if v <= 0 or m <= 0:
                raise ValueError("entries need positive values and multiplicities")
            if prev is not None and v <= prev:
                raise ValueError("entry values must be strictly increasing")
            prev = v

    @classmethod
    def from_entries(cls, entries: Iterable[Tuple[object, int]], zero_count: int = 0) -> "CompressedPoint":
        merged = {}
        zeros = zero_count
        for v, m in entries:
            v = Fraction(v)
            if m == 0:
                continue
            if v < 0:
                raise ValueError("coordinates must be nonnegative")
            if v == 0:
                zeros += m
            else:
                merged[v] = merged.get(v, 0) + m
        return cls(zeros, tuple(sorted(merged.items())))

    @classmethod
    def from_coords(cls, coords: Iterable[object]) -> "CompressedPoint":
        return cls.from_entries((c, 1) for c in coords)

    @classmethod
    def uniform(cls, k: int, n: int | None = None) -> "CompressedPoint":
        """The point with ``k`` coordinates ``1/k`` and ``n - k`` zeros."""
        n = k if n is None else n
        if not 1 <= k <= n:
            raise ValueError("need 1 <= k <= n")
        return cls(n - k, ((Fraction(1, k), k),))

    @property
    def n(self) -> int:
        return self.zero_count + sum(m for _, m in self.entries)

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(v for v, _ in self.entries)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(m for _, m in self.entries)

    @property
    def multiplicity_length(self) -> int:
        return len(self.entries)

    def total(self) -> Fraction:
        return sum((v * m for v, m in self.entries), Fraction(0))

    def in_simplex(self) -> bool:
        return self.total() == 1

    def in_subsimplex(self) -> bool:
        return self.total() <= 1

    def expand(self) -> Tuple[Fraction, ...]:
        out = [Fraction(0)] * self.zero_count
        for v, m in self.entries:
            out.extend([v] * m)
        return tuple(out)

    def scaled(self, c) -> "CompressedPoint":
        c = Fraction(c)
        if c < 0:
            raise ValueError("scale must be nonnegative")
        if c == 0:
            return CompressedPoint(self.n, ())
        return CompressedPoint(self.zero_count, tuple((v * c, m) for v, m in self.entries))


def eval_power_sum(x: CompressedPoint, a: int) -> Fraction:
    if a < 1:
        raise ValueError("power sum index must be >= 1")
    return sum((m * v**a for v, m in x.entries), Fraction(0))


def eval_elementary(x: CompressedPoint, k: int) -> Fraction:
    """``e_k`` at ``x``, read off from the product of ``(1 + v*z)^m``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    coeffs = [Fraction(1)] + [Fraction(0)] * k
    for v, m in x.entries:
        binom = [comb(m, j) * v**j for j in range(min(m, k) + 1)]
        new = [Fraction(0)] * (k + 1)
        for i, c in enumerate(coeffs):
            if not c:
                continue
            for j, b in enumerate(binom):
                if i + j > k:
                    break
                new[i + j] += c * b
        coeffs = new
    return coeffs[k]


def power_sum_of_values(values: Sequence, a: int):
    """Power sum of an arbitrary (possibly signed) coordinate list."""
    return sum((v**a for v in values), Fraction(0))


def nu_eval(x: CompressedPoint, exponents: Sequence[int]) -> CellPoint:
    """The Vandermonde map with the given strictly increasing exponents."""
    exponents = tuple(exponents)
    if not exponents:
        raise ValueError("exponent list must be nonempty")
    if any(b <= a for a, b in zip(exponents, exponents[1:])):
        raise ValueError("exponents must be strictly increasing")
    return tuple(eval_power_sum(x, a) for a in exponents)


def nu_star(x: CompressedPoint, d: int) -> CellPoint:
    """``(p_2, ..., p_d)`` at ``x``."""
    return nu_eval(x, range(2, d + 1))


def weighted_power_sums(values: Sequence, weights: Sequence, exponents: Sequence[int]):
    """``(sum_i w_i v_i^a for a in exponents)``; internal helper for patch sampling."""
    return tuple(sum((w * v**a for v, w in zip(values, weights)), Fraction(0)) for a in exponents)


class Basis(enum.Enum):
    POWER = "p"
    ELEMENTARY = "e"

    @property
    def other(self) -> "Basis":
        return Basis.ELEMENTARY if self is Basis.POWER else Basis.POWER


@dataclass(frozen=True, eq=False)
class SymmetricPolynomial:
    """Polynomial in ``p_k`` or ``e_k`` (``k >= 1``) with rational coefficients.

    Monomials are sorted tuples of symbol indices, e.g. ``p_1^2 p_3`` is
    ``(1, 1, 3)``.  The weighted degree of a monomial is the sum of its
    indices.
    """

    basis: Basis
    terms: Mapping[Tuple[int, ...], Fraction]

    def __post_init__(self):
        clean = {}
        for m, c in self.terms.items():
            m = tuple(sorted(m))
            if any(k < 1 for k in m):
                raise ValueError("symbol indices must be >= 1")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
        object.__setattr__(self, "terms", {m: c for m, c in clean.items() if c})

    @classmethod
    def symbol(cls, k: int, basis: Basis = Basis.POWER) -> "SymmetricPolynomial":
        return cls(basis, {(k,): Fraction(1)})

    @classmethod
    def constant(cls, c, basis: Basis = Basis.POWER) -> "SymmetricPolynomial":
        return cls(basis, {(): Fraction(c)})

    def _coerce(self, other) -> "SymmetricPolynomial":
        if isinstance(other, SymmetricPolynomial):
            if other.basis is not self.basis:
                raise ValueError("basis mismatch; convert with newton_convert first")
            return other
        return SymmetricPolynomial.constant(other, self.basis)

    def __add__(self, other):
        other = self._coerce(other)
        return SymmetricPolynomial(self.basis, polyalg.add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return SymmetricPolynomial(self.basis, polyalg.scale(self.terms, -1))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return SymmetricPolynomial(self.basis, polyalg.mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return SymmetricPolynomial(self.basis, polyalg.power(self.terms, k))

    def __eq__(self, other):
        if not isinstance(other, SymmetricPolynomial):
            return NotImplemented
        return self.basis is other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __repr__(self):
        return f"SymmetricPolynomial({self.basis.value}: {self.pretty()})"

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def max_index(self) -> int:
        return max((k for m in self.terms for k in m), default=0)

    def evaluate(self, symbol_values: Mapping[int, object]):
        """Evaluate with explicit values for the basis symbols."""
        return polyalg.evaluate(self.terms, symbol_values)

    def at_point(self, x: CompressedPoint) -> Fraction:
        ks = range(1, self.max_index() + 1)
        if self.basis is Basis.POWER:
            vals = {k: eval_power_sum(x, k) for k in ks}
        else:
            vals = {k: eval_elementary(x, k) for k in ks}
        return self.evaluate(vals)

    def at_vector(self, values: Sequence):
        """Evaluate at an explicit (possibly signed) coordinate vector."""
        ks = range(1, self.max_index() + 1)
        if self.basis is Basis.POWER:
            vals = {k: power_sum_of_values(values, k) for k in ks}
        else:
            vals = {k: _elementary_of_values(values, k) for k in ks}
        return self.evaluate(vals)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (-sum(m), m)):
            c = self.terms[m]
            exps = polyalg.exponents(m)
            mono = "*".join(
                f"{self.basis.value}{k}" + (f"^{e}" if e > 1 else "") for k, e in sorted(exps.items())
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _elementary_of_values(values: Sequence, k: int):
    coeffs = [Fraction(1)] + [Fraction(0)] * k
    for v in values:
        for j in range(k, 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * v
    return coeffs[k]


@lru_cache(maxsize=None)
def _p_in_e(k: int) -> Tuple[Tuple[Tuple[int, ...], Fraction], ...]:
    # p_k = (-1)^(k-1) k e_k + sum_{i=1}^{k-1} (-1)^(k-1+i) e_{k-i} p_i
    poly = polyalg.scale(polyalg.sym(k), (-1) ** (k - 1) * k)
    for i in range(1, k):
        term = polyalg.mul(polyalg.sym(k - i), dict(_p_in_e(i)))
        poly = polyalg.add(poly, term, (-1) ** (k - 1 + i))
    return tuple(poly.items())


@lru_cache(maxsize=None)
def _e_in_p(k: int) -> Tuple[Tuple[Tuple[int, ...], Fraction], ...]:
    # k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i, with e_0 = 1
    poly: dict = {}
    for i in range(1, k + 1):
        prev = polyalg.const(1) if i == k else dict(_e_in_p(k - i))
        poly = polyalg.add(poly, polyalg.mul(prev, polyalg.sym(i)), (-1) ** (i - 1))
    return tuple(polyalg.scale(poly, Fraction(1, k)).items())


def basis_symbol_in(k: int, target: Basis) -> SymmetricPolynomial:
    """The symbol indexed ``k`` of the *other* basis, written in ``target``."""
    table = _e_in_p(k) if target is Basis.POWER else _p_in_e(k)
    return SymmetricPolynomial(target, dict(table))


def newton_convert(f: SymmetricPolynomial, target: Basis) -> SymmetricPolynomial:
    """Rewrite ``f`` in the ``target`` basis via Newton's identities.

    The identities hold in the ring of symmetric functions, so the result
    agrees with ``f`` in any number of variables ``n >= deg f``.
    """
    if f.basis is target:
        return f
    images = {k: basis_symbol_in(k, target).terms for k in range(1, f.max_index() + 1)}
    return SymmetricPolynomial(target, polyalg.substitute(f.terms, images))


def moment_vertex(k: int, d: int, basis: Basis = Basis.POWER) -> CellPoint:
    """Image of the uniform point with ``k`` equal coordinates under ``(p_2..p_d)`` or ``(e_2..e_d)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if d < 3:
        raise ValueError("d must be >= 3")
    if basis is Basis.POWER:
        return tuple(Fraction(1, k**j) for j in range(1, d))
    return tuple(Fraction(comb(k, j), k**j) for j in range(2, d + 1))
