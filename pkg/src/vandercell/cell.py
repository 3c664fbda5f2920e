"""Boundary patches of Vandermonde cells and the moment-curve correspondence.

A patch is the image under ``nu* = (p_2, ..., p_d)`` of a simplex whose
vertices are the uniform points ``kbar = (0, ..., 0, 1/k, ..., 1/k)``.  For
the sub-probability simplex and for the limit cell one vertex may be the
origin (:data:`~vandercell.gale.INF`); the image of such a patch is swept out
by flowing the opposite face towards the origin along monomial curves.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .gale import (
    INF,
    GaleSubset,
    MultiplicityType,
    MultiplicityVector,
    format_index,
    is_gale,
    multiplicity_to_gale,
    multiplicity_vectors,
    satisfies_evenness,
)
from .symcore import CellPoint, CompressedPoint, moment_vertex, nu_star

TYPE1, TYPE2 = MultiplicityType.TYPE1, MultiplicityType.TYPE2


class Source(enum.Enum):
    SIMPLEX = "simplex"
    SUBSIMPLEX = "subsimplex"
    LIMIT = "limit"


@dataclass(frozen=True)
class BoundaryPatch:
    source: Source
    multiplicity: Optional[MultiplicityVector]
    vertices: GaleSubset
    d: int

    @property
    def dimension(self) -> int:
        return self.d - 2

    @property
    def n(self) -> int:
        return self.vertices.ground_size

    def label(self) -> str:
        return "{" + ",".join(str(format_index(k)) for k in self.vertices.elements) + "}"


def _subsimplex_vertices(mv: MultiplicityVector, with_inf: bool) -> GaleSubset:
    elements = mv.suffix_sums() + ((INF,) if with_inf else ())
    return GaleSubset(mv.n, elements)


def enumerate_patches(n: int, d: int, source: Source = Source.SIMPLEX, k_max: Optional[int] = None) -> List[BoundaryPatch]:
    """Boundary patches, sorted by vertex set.

    For ``Source.LIMIT`` the ground set ``{1, 1/2, ...} u {0}`` is truncated
    to indices ``1..k_max`` (default ``n``) plus the origin.
    """
    if d < 3:
        raise ValueError("d must be >= 3")
    patches: List[BoundaryPatch] = []
    if source is Source.SIMPLEX:
        if n < d:
            raise ValueError("need n >= d")
        for mv in multiplicity_vectors(n, d - 1):
            patches.append(BoundaryPatch(source, mv, multiplicity_to_gale(mv), d))
    elif source is Source.SUBSIMPLEX:
        if n < d:
            raise ValueError("need n >= d")
        for mv in multiplicity_vectors(n, d - 1, kinds=(TYPE1,)):
            patches.append(BoundaryPatch(source, mv, _subsimplex_vertices(mv, False), d))
        for mv in multiplicity_vectors(n, d - 2):
            patches.append(BoundaryPatch(source, mv, _subsimplex_vertices(mv, True), d))
    elif source is Source.LIMIT:
        k_max = n if k_max is None else k_max
        if k_max < d:
            raise ValueError("need k_max >= d")
        # one sentinel stands for the omitted indices k_max+1, k_max+2, ...
        sentinel = k_max + 1
        ground = list(range(1, k_max + 1)) + [sentinel, INF]
        for S in itertools.combinations(list(range(1, k_max + 1)) + [INF], d - 1):
            if satisfies_evenness(S, ground):
                patches.append(BoundaryPatch(source, None, GaleSubset(k_max, S), d))
    else:
        raise ValueError(f"unknown source {source!r}")
    patches.sort(key=lambda p: p.vertices.elements)
    return patches


def kbar(k, n: int) -> CompressedPoint:
    """The uniform point with ``k`` nonzero coordinates; ``INF`` gives the origin."""
    if k == INF:
        return CompressedPoint(n, ())
    return CompressedPoint.uniform(k, n)


def kbar_combination(vertices: Sequence, weights: Sequence, n: int) -> CompressedPoint:
    """``sum lambda_k * kbar`` as a compressed point of the (sub-)simplex.

    Coordinate ``i`` counted from the largest receives ``sum_{k >= i} lambda_k / k``,
    so the values are ordered by construction.
    """
    if len(vertices) != len(weights):
        raise ValueError("one weight per vertex required")
    weights = [Fraction(w) for w in weights]
    if any(w < 0 for w in weights) or sum(weights) != 1:
        raise ValueError("weights must be nonnegative and sum to 1")
    pairs = sorted(((k, w) for k, w in zip(vertices, weights) if k != INF))
    if any(not 1 <= k <= n for k, _ in pairs):
        raise ValueError("vertex index outside [1..n]")
    entries = []
    prev = 0
    for idx, (k, _) in enumerate(pairs):
        value = sum((w / kk for kk, w in pairs[idx:]), Fraction(0))
        entries.append((value, k - prev))
        prev = k
    return CompressedPoint.from_entries(entries, zero_count=n - prev)


def scale_flow(u: Sequence, t) -> CellPoint:
    """``(t^2 u_1, t^3 u_2, ..., t^d u_{d-1})``; keeps the limit cell invariant."""
    if not 0 <= t <= 1:
        raise ValueError("flow parameter must lie in [0, 1]")
    return tuple(t ** (j + 2) * v for j, v in enumerate(u))


def patch_point(patch: BoundaryPatch, weights: Sequence) -> CellPoint:
    """Image of the barycentric point ``weights`` of the patch simplex.

    A patch with the origin as a vertex is realised by the flow: the
    remaining weights, renormalised to sum ``s = 1 - lambda_inf``, give a
    point ``u`` of the opposite face and the result is ``scale_flow(u, s)``.
    """
    elements = patch.vertices.elements
    weights = [Fraction(w) for w in weights]
    if len(weights) != len(elements):
        raise ValueError("one weight per vertex required")
    if not patch.vertices.has_inf:
        return nu_star(kbar_combination(elements, weights, patch.n), patch.d)
    finite = [(k, w) for k, w in zip(elements, weights) if k != INF]
    s = sum(w for _, w in finite)
    if s == 0:
        return tuple(Fraction(0) for _ in range(patch.d - 1))
    face = kbar_combination([k for k, _ in finite], [w / s for _, w in finite], patch.n)
    return scale_flow(nu_star(face, patch.d), s)


def compositions(total: int, parts: int) -> Iterable[Tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative integers, lexicographic."""
    for cuts in itertools.combinations_with_replacement(range(total + 1), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


@dataclass(frozen=True)
class PatchSample:
    weights: Tuple[Fraction, ...]
    point: CellPoint


def patch_sample(patch: BoundaryPatch, resolution: int) -> List[PatchSample]:
    """Exact images of the barycentric lattice with step ``1/resolution``."""
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    out = []
    for comp in compositions(resolution, patch.vertices.size):
        w = tuple(Fraction(c, resolution) for c in comp)
        out.append(PatchSample(w, patch_point(patch, w)))
    return out


def polytope_point(vertices: Sequence, weights: Sequence, d: int) -> CellPoint:
    """``sum lambda_k (1/k, ..., 1/k^(d-1))``; the origin for ``INF``."""
    total = [Fraction(0)] * (d - 1)
    for k, w in zip(vertices, weights):
        if k == INF:
            continue
        for j, v in enumerate(moment_vertex(k, d)):
            total[j] += Fraction(w) * v
    return tuple(total)


def kappa_facet(S, weights: Sequence, n: int, d: int, require_facet: bool = True) -> CellPoint:
    """Send ``sum lambda_k (1/k, ..., 1/k^(d-1))`` to ``nu*(sum lambda_k kbar)``.

    With ``require_facet=False`` the same formula is applied to any index
    set; this is how one sees that no global extension is well defined.
    """
    given = tuple(S.elements if isinstance(S, GaleSubset) else S)
    if len(given) != d - 1:
        raise ValueError(f"expected {d - 1} vertices")
    if require_facet and not is_gale(given, n, d - 1):
        raise ValueError(f"{tuple(sorted(given))} is not a facet of C({n},{d - 1})")
    return nu_star(kbar_combination(given, weights, n), d)
