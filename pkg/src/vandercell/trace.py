"""Trace polynomials over real symmetric matrices.

A trace polynomial only sees spectra: ``tr(X^k)`` is the power sum ``p_k``
of the eigenvalues and ``ntr(X^k)`` is ``p_k / size``.  Unnormalized
expressions become product symmetric polynomials (one group of power sums
per matrix variable); nonnegativity of those is undecidable in general, so
only a bounded witness search is offered.  Normalized expressions are
handed to the half-degree machinery.

The encoder :func:`tau_encode` turns an integer polynomial ``p(Y)`` into a
product symmetric polynomial whose nonnegativity on products of simplices
is equivalent to nonnegativity of ``p`` on ``{(n-1)/n}^k``.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import polyalg
from .expr import NUMERIC_OPS, Expr, Trace, Var, fold, parse, pretty, to_poly, walk
from .halfdegree import (
    SearchConfig,
    Verdict,
    build_phi,
    build_phi_groups,
    check_phi,
)
from .symcore import Basis, SymmetricPolynomial, basis_symbol_in

# ---------------------------------------------------------------------------
# semantics


def variables(e: Expr) -> Tuple[str, ...]:
    """Matrix variables in order of first appearance."""
    seen: List[str] = []
    for node in walk(e):
        if isinstance(node, Trace) and node.var not in seen:
            seen.append(node.var)
    return tuple(seen)


def is_normalized(e: Expr) -> bool:
    return any(isinstance(n, Trace) and n.normalized for n in walk(e))


def eval_on_spectra(e: Expr, spectra: Mapping[str, Sequence]) -> Fraction:
    """Exact value with each variable replaced by a matrix of the given spectrum."""

    def leaf(node):
        if isinstance(node, Var):
            raise ValueError(f"bare variable {node.name!r} outside a trace")
        if node.var not in spectra:
            raise ValueError(f"unbound matrix variable {node.var!r}")
        spectrum = [Fraction(v) for v in spectra[node.var]]
        if not spectrum:
            raise ValueError(f"empty spectrum for {node.var!r}")
        total = sum((v**node.power for v in spectrum), Fraction(0))
        return total / len(spectrum) if node.normalized else total

    return fold(e, leaf, Fraction, NUMERIC_OPS)


@dataclass(frozen=True, eq=False)
class ProductSymmetricPolynomial:
    """Polynomial in symbols ``(group, k)``: ``p_k`` or ``e_k`` of group ``group`` (0-based)."""

    groups: Tuple[str, ...]
    basis: Basis
    terms: Mapping[Tuple[Tuple[int, int], ...], Fraction]

    def __post_init__(self):
        object.__setattr__(self, "terms", {m: Fraction(c) for m, c in self.terms.items() if c})

    @property
    def group_count(self) -> int:
        return len(self.groups)

    def group_degrees(self, monomial) -> Tuple[int, ...]:
        degs = [0] * self.group_count
        for g, k in monomial:
            degs[g] += k
        return tuple(degs)

    def degrees(self) -> Tuple[int, ...]:
        """Maximal degree in each group."""
        out = [0] * self.group_count
        for m in self.terms:
            for g, d in enumerate(self.group_degrees(m)):
                out[g] = max(out[g], d)
        return tuple(out)

    def is_multihomogeneous(self) -> bool:
        return len({self.group_degrees(m) for m in self.terms}) <= 1

    def evaluate(self, spectra: Sequence[Sequence]) -> Fraction:
        """Value at explicit coordinate vectors, one per group."""
        values = {}
        for g, spectrum in enumerate(spectra):
            spectrum = [Fraction(v) for v in spectrum]
            top = max((k for m in self.terms for gg, k in m if gg == g), default=0)
            for k in range(1, top + 1):
                if self.basis is Basis.POWER:
                    values[(g, k)] = sum((v**k for v in spectrum), Fraction(0))
                else:
                    values[(g, k)] = SymmetricPolynomial.symbol(k, Basis.ELEMENTARY).at_vector(spectrum)
        return polyalg.evaluate(self.terms, values)

    def to_basis(self, target: Basis) -> "ProductSymmetricPolynomial":
        if target is self.basis:
            return self
        used = polyalg.symbols(self.terms)
        images = {(g, k): {tuple((g, j) for j in m): c for m, c in basis_symbol_in(k, target).terms.items()} for g, k in used}
        return ProductSymmetricPolynomial(self.groups, target, polyalg.substitute(self.terms, images))

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=lambda m: (-sum(k for _, k in m), m)):
            c = self.terms[m]
            syms = "*".join(
                f"{self.basis.value}{k}({self.groups[g]})" + (f"^{e}" if e > 1 else "")
                for (g, k), e in sorted(polyalg.exponents(m).items())
            )
            mag = abs(c)
            body = syms if (syms and mag == 1) else (f"{mag}*{syms}" if syms else str(mag))
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class MultihomogeneityReport:
    degrees: Tuple[int, ...]
    multihomogeneous: bool


def to_product_symmetric(e: Expr) -> Tuple[ProductSymmetricPolynomial, MultihomogeneityReport]:
    """``tr(X_i^k)`` becomes the power sum ``p_k`` of group ``i``."""
    if is_normalized(e):
        raise ValueError("normalized expressions are handled by the half-degree check")
    groups = variables(e)
    index = {v: i for i, v in enumerate(groups)}

    def leaf(node):
        if isinstance(node, Var):
            raise ValueError(f"bare variable {node.name!r} outside a trace")
        return polyalg.sym((index[node.var], node.power))

    f = ProductSymmetricPolynomial(groups, Basis.POWER, to_poly(e, leaf))
    return f, MultihomogeneityReport(f.degrees(), f.is_multihomogeneous())


# ---------------------------------------------------------------------------
# bounded witness search


@dataclass(frozen=True)
class Witness:
    spectra: Dict[str, Tuple[Fraction, ...]]
    value: Fraction


@dataclass(frozen=True)
class NoneFound:
    budget: int


def candidate_spectra(count: int, seed: int = 0, max_size: int = 6) -> List[Tuple[Fraction, ...]]:
    """Deterministic list of spectra: scaled uniform points, sign patterns, then seeded randoms."""
    out: List[Tuple[Fraction, ...]] = []
    seen = set()

    def push(spec):
        spec = tuple(Fraction(v) for v in spec)
        if spec not in seen:
            seen.add(spec)
            out.append(spec)

    for k in range(1, max_size + 1):
        push([1] * k)
        if k >= 2:
            push([1] * (k - 1) + [-1])
        push([Fraction(1, k)] * k)
        push([2] * k)
        push([-1] * k)
        if k >= 2:
            # a flowed cell vertex: (1/k, ..., 1/k) scaled towards the origin
            push([Fraction(1, 2 * k)] * (k - 1) + [1])
            push([2] + [-1] * (k - 1))
    rng = random.Random(seed)
    while len(out) < count:
        size = rng.randint(1, max_size)
        push([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(size)])
    return out[:count]


def _index_tuples(groups: int, limit: int):
    """Index tuples ordered by their sum, then lexicographically."""
    for total in range(groups * (limit - 1) + 1):
        def rec(prefix, remaining, slots):
            if slots == 1:
                if remaining < limit:
                    yield prefix + (remaining,)
                return
            for i in range(min(remaining, limit - 1) + 1):
                yield from rec(prefix + (i,), remaining - i, slots - 1)

        yield from rec((), total, groups)


def counterexample_search(e: Expr, budget: int = 2000, seed: int = 0):
    """Evaluate ``e`` on up to ``budget`` candidate spectra tuples; first negative wins."""
    if is_normalized(e):
        raise ValueError("use the half-degree check for normalized expressions")
    groups = variables(e)
    if not groups:
        value = eval_on_spectra(e, {})
        return Witness({}, value) if value < 0 else NoneFound(budget)
    per_group = max(2, math.ceil(budget ** (1 / len(groups))) + 1)
    cands = candidate_spectra(per_group, seed)
    tried = 0
    for idx in _index_tuples(len(groups), len(cands)):
        if tried >= budget:
            break
        tried += 1
        spectra = {g: cands[i] for g, i in zip(groups, idx)}
        value = eval_on_spectra(e, spectra)
        if value < 0:
            return Witness(spectra, value)
    return NoneFound(budget)


def check_normalized(e: Expr, config: SearchConfig = SearchConfig()) -> Verdict:
    """Half-degree check of a normalized trace polynomial over all matrix sizes."""
    if not is_normalized(e) and any(isinstance(n, Trace) for n in walk(e)):
        raise ValueError("expression is not normalized")
    groups = variables(e)
    index = {v: i for i, v in enumerate(groups)}

    def leaf(node):
        if isinstance(node, Var):
            raise ValueError(f"bare variable {node.name!r} outside a trace")
        return polyalg.sym((index[node.var], node.power))

    terms = to_poly(e, leaf)
    single = len(groups) == 1
    degree = polyalg.degree(terms, weight=lambda s: s[1])
    if single and degree % 2 == 0:
        f = SymmetricPolynomial(Basis.POWER, {tuple(k for _, k in m): c for m, c in terms.items()})
        phi = build_phi(f)
    else:
        phi = build_phi_groups(terms, max(len(groups), 1))
    return check_phi(phi, config)


# ---------------------------------------------------------------------------
# the tau encoder


def g_convex(x):
    """``2x^2 - x``; touches ``L`` exactly at ``(t-1)/t`` and at 1."""
    return 2 * x * x - x


def L_segment(x) -> int:
    """The ``t >= 1`` with ``x`` in ``[1 - 1/t, 1 - 1/(t+1)]``."""
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError("segment index needs 0 <= x < 1")
    return max(1, math.floor(1 / (1 - x)))


def L_eval(x) -> Fraction:
    """Piecewise linear interpolation of ``(t-1)/t -> (t-1)(t-2)/t^2``."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError("L is defined on [0, 1]")
    if x == 1:
        return Fraction(1)
    t = L_segment(x)
    return Fraction(3 * t * t - t - 2, t * (t + 1)) * x - Fraction(2 * (t - 1), t + 1)


_YZ = re.compile(r"([YZ])(\d+)$")


def _check_integer_poly(p: polyalg.Poly, k: int) -> None:
    for m, c in p.items():
        if c.denominator != 1:
            raise ValueError("tau_encode needs integer coefficients")
        for s in m:
            match = _YZ.match(s) if isinstance(s, str) else None
            if not match or match.group(1) != "Y" or not 1 <= int(match.group(2)) <= k:
                raise ValueError(f"symbol {s!r} is not one of Y1..Y{k}")


def aux_polynomial(p: polyalg.Poly, k: int) -> Tuple[polyalg.Poly, Fraction]:
    """``q = p * prod (1 - Y_i)^6 + M * sum_i (Z_i - g(Y_i))`` and its ``M``."""
    _check_integer_poly(p, k)
    deg = polyalg.degree(p)
    M = sum((abs(c) for c in p.values()), Fraction(0)) * 100 * max(deg, 0)
    q = dict(p)
    for i in range(1, k + 1):
        q = polyalg.mul(q, polyalg.power(polyalg.add(polyalg.const(1), polyalg.sym(f"Y{i}"), -1), 6))
    for i in range(1, k + 1):
        y = polyalg.sym(f"Y{i}")
        gy = polyalg.add(polyalg.scale(polyalg.mul(y, y), 2), y, -1)
        q = polyalg.add(q, polyalg.scale(polyalg.add(polyalg.sym(f"Z{i}"), gy, -1), M))
    return q, M


def tau_encode(p: polyalg.Poly, k: int) -> ProductSymmetricPolynomial:
    """Multihomogeneous product symmetric polynomial in power sums.

    Each ``Y_i`` becomes ``2 e_2 / e_1^2`` and each ``Z_i`` becomes
    ``6 e_3 / e_1^3`` of group ``i``; the denominators are cleared by
    ``prod_i e_1^(3 deg q)``.  On the simplex (``e_1 = 1``) the result is
    ``q(2 e_2, 6 e_3)``.
    """
    q, _ = aux_polynomial(p, k)
    D = polyalg.degree(q)
    terms: Dict[Tuple, Fraction] = {}
    for m, c in q.items():
        counts = polyalg.exponents(m)
        mono: List[Tuple[int, int]] = []
        coeff = c
        for i in range(k):
            a = counts.get(f"Y{i + 1}", 0)
            b = counts.get(f"Z{i + 1}", 0)
            coeff *= Fraction(2) ** a * Fraction(6) ** b
            mono += [(i, 1)] * (3 * D - 2 * a - 3 * b) + [(i, 2)] * a + [(i, 3)] * b
        key = tuple(sorted(mono))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    groups = tuple(f"X{i + 1}" for i in range(k))
    return ProductSymmetricPolynomial(groups, Basis.ELEMENTARY, terms).to_basis(Basis.POWER)


def uniform_spectrum(n: int) -> Tuple[Fraction, ...]:
    return (Fraction(1, n),) * n


def describe(e: Expr) -> str:
    return pretty(e)
