"""Cyclic polytope combinatorics.

Ground elements are indices ``1..n``; index ``k`` stands for the moment
point of the uniform vector with ``k`` nonzero coordinates, so larger
indices have smaller moment-curve parameter ``1/k``.  The distinguished
element :data:`INF` stands for the origin (parameter 0) and sorts after
every integer index, keeping index order aligned with decreasing value.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

INF = math.inf


def format_index(k) -> object:
    return "inf" if k == INF else int(k)


class MultiplicityType(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    NEITHER = "neither"


@dataclass(frozen=True)
class GaleSubset:
    ground_size: int
    elements: Tuple[object, ...]

    def __post_init__(self):
        els = tuple(sorted(self.elements))
        if len(set(els)) != len(els):
            raise ValueError("elements must be distinct")
        for k in els:
            if k != INF and not (isinstance(k, int) and 1 <= k <= self.ground_size):
                raise ValueError(f"element {k!r} outside ground set [1..{self.ground_size}]")
        object.__setattr__(self, "elements", els)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def has_inf(self) -> bool:
        return INF in self.elements

    def to_json(self) -> list:
        return [format_index(k) for k in self.elements]


def _runs(elements: Sequence[int]) -> List[Tuple[int, int]]:
    """Maximal blocks of consecutive integers, as ``(start, length)``."""
    runs: List[Tuple[int, int]] = []
    for k in elements:
        if runs and runs[-1][0] + runs[-1][1] == k:
            start, length = runs[-1]
            runs[-1] = (start, length + 1)
        else:
            runs.append((k, 1))
    return runs


def is_gale(S, n: int, d: int) -> bool:
    """Gale's evenness condition for a ``d``-subset of ``[n]``.

    Every maximal run of consecutive elements must have even length, except
    that a run touching 1 or touching ``n`` may be odd.  Parity of ``d`` then
    decides whether zero or two (``d`` even) or exactly one (``d`` odd) of
    the boundary runs is odd.
    """
    elements = tuple(sorted(S.elements if isinstance(S, GaleSubset) else S))
    if len(elements) != d:
        raise ValueError(f"expected a subset of size {d}, got {len(elements)}")
    if len(set(elements)) != d or any(not 1 <= k <= n for k in elements):
        raise ValueError("subset must consist of distinct elements of [n]")
    odd_at_start = odd_at_end = False
    for start, length in _runs(elements):
        if length % 2 == 0:
            continue
        if start == 1:
            odd_at_start = True
        elif start + length - 1 == n:
            odd_at_end = True
        else:
            return False
    if d % 2 == 0:
        return odd_at_start == odd_at_end
    return odd_at_start != odd_at_end


def satisfies_evenness(S: Sequence, ground: Sequence) -> bool:
    """Separation form of the evenness condition on an ordered ground sequence.

    Any two ground elements outside ``S`` are separated by an even number of
    elements of ``S``.
    """
    chosen = set(S)
    if not chosen <= set(ground):
        raise ValueError("subset is not contained in the ground sequence")
    between = None
    for g in ground:
        if g in chosen:
            if between is not None:
                between += 1
        else:
            if between is not None and between % 2:
                return False
            between = 0
    return True


def is_gale_separation(S, n: int, d: int) -> bool:
    elements = tuple(S.elements if isinstance(S, GaleSubset) else S)
    if len(elements) != d:
        raise ValueError(f"expected a subset of size {d}, got {len(elements)}")
    return satisfies_evenness(elements, range(1, n + 1))


def _pair_patterns(i: int, n: int, k: int) -> Iterator[Tuple[int, ...]]:
    # unions of consecutive pairs inside [i..n], optionally ending with the singleton {n}
    if k == 0:
        yield ()
        return
    if i > n:
        return
    if k == 1 and i <= n:
        yield (n,)
    if k >= 2 and i + 1 <= n:
        for rest in _pair_patterns(i + 2, n, k - 2):
            yield (i, i + 1) + rest
    yield from _pair_patterns(i + 1, n, k)


def enumerate_facets(n: int, d: int) -> List[GaleSubset]:
    """Facets of ``C(n, d)`` as lexicographically sorted index sets."""
    if not n > d >= 2:
        raise ValueError("need n > d >= 2")
    found = set(_pair_patterns(1, n, d))
    found.update((1,) + rest for rest in _pair_patterns(2, n, d - 1))
    return [GaleSubset(n, s) for s in sorted(found) if len(set(s)) == d]


def enumerate_facets_bruteforce(n: int, d: int) -> List[GaleSubset]:
    return [
        GaleSubset(n, s)
        for s in itertools.combinations(range(1, n + 1), d)
        if is_gale_separation(s, n, d)
    ]


@dataclass(frozen=True)
class MultiplicityVector:
    """``(m0; m1, ..., m_l)``: zero count, then multiplicities of increasing values."""

    m0: int
    m: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(v) for v in self.m))
        if self.m0 < 0 or any(v < 1 for v in self.m):
            raise ValueError("m0 must be >= 0 and every m_i >= 1")

    @classmethod
    def from_full(cls, full: Sequence[int]) -> "MultiplicityVector":
        return cls(int(full[0]), tuple(full[1:]))

    @property
    def n(self) -> int:
        return self.m0 + sum(self.m)

    @property
    def length(self) -> int:
        return len(self.m)

    def full(self) -> Tuple[int, ...]:
        return (self.m0,) + self.m

    def is_type1(self) -> bool:
        return all(v == 1 for v in self.m[0::2])

    def is_type2(self) -> bool:
        return self.m0 == 0 and all(v == 1 for v in self.m[1::2])

    @property
    def classification(self) -> MultiplicityType:
        # both patterns only coincide when n < d, which no caller uses
        if self.is_type1():
            return MultiplicityType.TYPE1
        if self.is_type2():
            return MultiplicityType.TYPE2
        return MultiplicityType.NEITHER

    def suffix_sums(self) -> Tuple[int, ...]:
        """``(m_l, m_{l-1} + m_l, ..., m_1 + ... + m_l)``."""
        return tuple(itertools.accumulate(reversed(self.m)))


def multiplicity_to_gale(mv: MultiplicityVector) -> GaleSubset:
    """Vertex indices of the simplex attached to a type (1)/(2) vector."""
    kind = mv.classification
    if kind is MultiplicityType.NEITHER:
        raise ValueError(f"{mv.full()} is neither type (1) nor type (2)")
    # type (1) has m_1 = 1, so the top two vertices are n - m0 and n - m0 - 1;
    # type (2) has m0 = 0 and starts at n.  Both are partial sums from the top.
    vertices = []
    top = mv.n - mv.m0
    for v in mv.m:
        vertices.append(top)
        top -= v
    return GaleSubset(mv.n, tuple(vertices))


def gale_to_multiplicity(S, n: int, d: int) -> MultiplicityVector:
    """Inverse of :func:`multiplicity_to_gale` for facets of ``C(n, d-1)``."""
    elements = tuple(sorted(S.elements if isinstance(S, GaleSubset) else S))
    if not is_gale(elements, n, d - 1):
        raise ValueError(f"{elements} is not a facet of C({n},{d - 1})")
    runs = _runs(elements)
    starts_odd = runs[0][0] == 1 and runs[0][1] % 2 == 1
    ends_odd = runs[-1][0] + runs[-1][1] - 1 == n and runs[-1][1] % 2 == 1
    if (d - 1) % 2 == 1:
        # one odd boundary run: {1} forces type (1), {n} forces type (2)
        expected = MultiplicityType.TYPE1 if starts_odd else MultiplicityType.TYPE2
    else:
        # pairs only give type (1); {1, n} plus pairs give type (2)
        expected = MultiplicityType.TYPE2 if (starts_odd and ends_odd) else MultiplicityType.TYPE1
    top = elements[::-1]
    m = [top[i] - top[i + 1] for i in range(len(top) - 1)] + [top[-1]]
    mv = MultiplicityVector(n - top[0], tuple(m))
    if mv.classification is not expected:
        raise AssertionError(f"inconsistent classification for {elements}")
    return mv


def multiplicity_vectors(n: int, length: int, kinds=(MultiplicityType.TYPE1, MultiplicityType.TYPE2)) -> List[MultiplicityVector]:
    """All vectors of the given length and total ``n`` whose type is in ``kinds``."""
    out = []
    for m0 in range(n - length + 1):
        rest = n - m0
        for cuts in itertools.combinations(range(1, rest), length - 1):
            bounds = (0,) + cuts + (rest,)
            mv = MultiplicityVector(m0, tuple(b - a for a, b in zip(bounds, bounds[1:])))
            kind = mv.classification
            if kind in kinds:
                out.append(mv)
    return out
