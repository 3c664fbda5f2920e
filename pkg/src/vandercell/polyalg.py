"""Sparse exact polynomials over arbitrary hashable, orderable symbols.

A polynomial is a ``dict`` mapping a monomial to a nonzero ``Fraction``.
A monomial is a sorted tuple of symbols with repetition, so ``x*x*y`` is
``('x', 'x', 'y')`` and the constant monomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Hashable, Mapping, Tuple

Monomial = Tuple[Hashable, ...]
Poly = Dict[Monomial, Fraction]


def const(c) -> Poly:
    c = Fraction(c)
    return {(): c} if c else {}


def sym(s) -> Poly:
    return {(s,): Fraction(1)}


def add(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction], scale=1) -> Poly:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + scale * c
        if v:
            out[m] = Fraction(v)
        else:
            out.pop(m, None)
    return out


def scale(a: Mapping[Monomial, Fraction], c) -> Poly:
    c = Fraction(c)
    if not c:
        return {}
    return {m: v * c for m, v in a.items()}


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    return tuple(sorted(m1 + m2))


def mul(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction]) -> Poly:
    out: Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = _mono_mul(m1, m2)
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def power(a: Mapping[Monomial, Fraction], k: int) -> Poly:
    if k < 0:
        raise ValueError("negative exponent")
    result = const(1)
    base = dict(a)
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def substitute(a: Mapping[Monomial, Fraction], images: Mapping[Hashable, Poly]) -> Poly:
    """Replace every symbol that has an image; other symbols are kept."""
    cache: Dict[Tuple[Hashable, int], Poly] = {}

    def sym_pow(s, e):
        key = (s, e)
        if key not in cache:
            cache[key] = power(images[s], e) if s in images else {(s,) * e: Fraction(1)}
        return cache[key]

    out: Poly = {}
    for m, c in a.items():
        term = const(c)
        for s, e in exponents(m).items():
            term = mul(term, sym_pow(s, e))
        out = add(out, term)
    return out


def exponents(m: Monomial) -> Dict[Hashable, int]:
    counts: Dict[Hashable, int] = {}
    for s in m:
        counts[s] = counts.get(s, 0) + 1
    return counts


def evaluate(a: Mapping[Monomial, Fraction], values: Mapping[Hashable, object], zero=Fraction(0)):
    total = zero
    for m, c in a.items():
        term = c
        for s, e in exponents(m).items():
            term = term * values[s] ** e
        total = total + term
    return total


def degree(a: Mapping[Monomial, Fraction], weight: Callable[[Hashable], int] = lambda s: 1) -> int:
    """Maximum weighted degree; ``-1`` for the zero polynomial."""
    if not a:
        return -1
    return max(sum(weight(s) for s in m) for m in a)


def symbols(a: Mapping[Monomial, Fraction]) -> set:
    return {s for m in a for s in m}
