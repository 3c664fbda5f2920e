"""Half-degree reductions and the power-mean nonnegativity check.

At a fixed number of variables ``n`` a symmetric polynomial of degree
``deg`` is nonnegative as soon as it is nonnegative on points with at most
``max(deg // 2, 2)`` distinct coordinates.  Dividing every power sum by
``n`` (a *power mean* polynomial) and letting ``n`` vary, the relative
multiplicities become a point ``s`` of a simplex and the whole family is
nonnegative iff

    Phi(s, t) = sum_lambda c_lambda prod_i (s_1 t_1^lambda_i + ... + s_b t_b^lambda_i)

is nonnegative on ``simplex x R^b``.  :func:`check_power_mean_all_n`
searches that set numerically and certifies any negative value with an
exact rational point in some concrete ``n``.
"""

from __future__ import annotations

import enum
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import minimize

from . import polyalg
from .symcore import Basis, SymmetricPolynomial, newton_convert

# ---------------------------------------------------------------------------
# fixed n


def positive_compositions(n: int, parts: int):
    """Compositions of ``n`` into exactly ``parts`` positive integers, lexicographic."""
    for cuts in itertools.combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def half_degree_bound(degree: int) -> int:
    return max(degree // 2, 2)


@dataclass(frozen=True)
class ReducedProblem:
    """``f`` restricted to points taking value ``x_i`` with multiplicity ``alpha_i``.

    ``polynomial`` is over the symbols ``0..j-1`` (one per distinct value).
    """

    multiplicities: Tuple[int, ...]
    polynomial: Dict[Tuple[int, ...], Fraction]
    power_mean: bool = False

    @property
    def n(self) -> int:
        return sum(self.multiplicities)

    def evaluate(self, xs: Sequence):
        zero = 0.0 if any(isinstance(x, float) for x in xs) else Fraction(0)
        return polyalg.evaluate(self.polynomial, dict(enumerate(xs)), zero=zero)

    def expanded_point(self, xs: Sequence) -> Tuple:
        return tuple(x for x, a in zip(xs, self.multiplicities) for _ in range(a))


def reduce_fixed_n(f: SymmetricPolynomial, n: int, power_mean: bool = False) -> List[ReducedProblem]:
    """One restriction per composition of ``n`` into ``j = 1..kappa`` parts.

    With ``power_mean=True`` each power sum is divided by ``n`` first.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    f = newton_convert(f, Basis.POWER)
    kappa = half_degree_bound(max(f.degree, 0))
    out = []
    for j in range(1, min(kappa, n) + 1):
        for alpha in positive_compositions(n, j):
            scale = Fraction(1, n) if power_mean else Fraction(1)
            images = {
                k: {(i,) * k: scale * a for i, a in enumerate(alpha)}
                for k in range(1, f.max_index() + 1)
            }
            out.append(ReducedProblem(alpha, polyalg.substitute(f.terms, images), power_mean))
    return out


# ---------------------------------------------------------------------------
# Phi


@dataclass(frozen=True)
class PhiFunction:
    """``Phi`` for one or several variable groups.

    ``blocks[g]`` is the number of ``(s, t)`` pairs of group ``g``; each term
    is ``(coefficient, lambda)`` where ``lambda`` lists ``(group, degree)``
    factors.
    """

    blocks: Tuple[int, ...]
    terms: Tuple[Tuple[Fraction, Tuple[Tuple[int, int], ...]], ...]
    homogeneous: bool = True
    degree: int = 0

    @property
    def d(self) -> int:
        if len(self.blocks) != 1:
            raise ValueError("d is only defined for a single group")
        return self.blocks[0]

    @property
    def groups(self) -> int:
        return len(self.blocks)

    def exponents(self, group: int) -> List[int]:
        return sorted({k for _, lam in self.terms for g, k in lam if g == group})

    def coefficient_norm(self) -> Fraction:
        return sum((abs(c) for c, _ in self.terms), Fraction(0))

    def evaluate_groups(self, ss: Sequence[Sequence], ts: Sequence[Sequence]):
        """Exact for rational input; any number of pairs per group is accepted."""
        exact = not any(isinstance(v, float) for seq in list(ss) + list(ts) for v in seq)
        zero = Fraction(0) if exact else 0.0
        cache: Dict[Tuple[int, int], object] = {}

        def moment(g, k):
            key = (g, k)
            if key not in cache:
                cache[key] = sum((s * t**k for s, t in zip(ss[g], ts[g])), zero)
            return cache[key]

        total = zero
        for c, lam in self.terms:
            term = c if exact else float(c)
            for g, k in lam:
                term = term * moment(g, k)
            total = total + term
        return total

    def evaluate(self, s: Sequence, t: Sequence):
        if self.groups != 1:
            raise ValueError("use evaluate_groups for several groups")
        return self.evaluate_groups([s], [t])


def _phi_terms(terms: Dict[Tuple, Fraction]) -> Tuple:
    return tuple((c, tuple(m)) for m, c in sorted(terms.items(), key=lambda kv: (len(kv[0]), kv[0])))


def build_phi(f: SymmetricPolynomial) -> PhiFunction:
    """``Phi_f`` with ``max(deg f / 2, 2)`` pairs (one pair cannot detect ``p_1^2 - p_2``)."""
    f = newton_convert(f, Basis.POWER)
    deg = f.degree
    if deg % 2:
        raise ValueError(f"degree {deg} is odd; Phi needs an even degree")
    terms = {tuple((0, k) for k in m): c for m, c in f.terms.items()}
    return PhiFunction((half_degree_bound(deg),), _phi_terms(terms), f.is_homogeneous(), deg)


def build_phi_groups(terms: Dict[Tuple[Tuple[int, int], ...], Fraction], groups: int) -> PhiFunction:
    """``Phi`` for a polynomial in power sums of several groups.

    Group ``g`` gets as many pairs as the largest power of its variable that
    occurs (at least two).
    """
    blocks = []
    for g in range(groups):
        top = max((k for m in terms for gg, k in m if gg == g), default=1)
        blocks.append(max(top, 2))
    degrees = {sum(k for _, k in m) for m in terms}
    deg = max(degrees, default=0)
    return PhiFunction(tuple(blocks), _phi_terms(dict(terms)), len(degrees) <= 1, deg)


def power_mean_value(phi: PhiFunction, point_groups: Sequence[Sequence]) -> Fraction:
    """``f_n`` at explicit coordinate vectors (one per group), each power sum divided by its length."""
    ss = [[Fraction(1, len(p))] * len(p) for p in point_groups]
    return phi.evaluate_groups(ss, [list(map(Fraction, p)) for p in point_groups])


# ---------------------------------------------------------------------------
# numeric all-n check


def project_simplex(v: Sequence[float]) -> List[float]:
    """Euclidean projection onto the probability simplex (sort-and-threshold)."""
    u = sorted(v, reverse=True)
    css = 0.0
    theta = 0.0
    for i, ui in enumerate(u, start=1):
        css += ui
        candidate = (css - 1) / i
        if ui - candidate > 0:
            theta = candidate
    return [max(x - theta, 0.0) for x in v]


class _FloatPhi:
    """Float evaluation of a ``PhiFunction`` tuned for tiny inputs."""

    def __init__(self, phi: PhiFunction):
        self.keys = sorted({(g, k) for _, lam in phi.terms for g, k in lam})
        slot = {key: i for i, key in enumerate(self.keys)}
        self.terms = [(float(c), [slot[key] for key in lam]) for c, lam in phi.terms]

    def __call__(self, ss: Sequence[Sequence[float]], ts: Sequence[Sequence[float]]) -> float:
        moments = [sum(a * b**k for a, b in zip(ss[g], ts[g])) for g, k in self.keys]
        total = 0.0
        for c, idx in self.terms:
            for i in idx:
                c *= moments[i]
            total += c
        return total


@dataclass(frozen=True)
class SearchConfig:
    budget: int = 64
    box_radius: float = 10.0
    tol: float = 1e-9
    seed: int = 0
    threads: int = 1
    retry_radius: Optional[float] = 100.0
    max_n: int = 2000
    maxiter: int = 1500


class VerdictKind(enum.Enum):
    NUMERICALLY_NONNEGATIVE = "numerically_nonnegative"
    COUNTEREXAMPLE = "counterexample"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class NumericallyNonnegative:
    """No negative value found in the searched box; not a proof."""

    min_found: float
    box_radius: float
    kind: VerdictKind = VerdictKind.NUMERICALLY_NONNEGATIVE


@dataclass(frozen=True)
class Counterexample:
    s: Tuple[Tuple[Fraction, ...], ...]
    t: Tuple[Tuple[Fraction, ...], ...]
    value: Fraction
    realized_n: Tuple[int, ...]
    realized_point: Tuple[Tuple[Fraction, ...], ...]
    kind: VerdictKind = VerdictKind.COUNTEREXAMPLE


@dataclass(frozen=True)
class Inconclusive:
    min_found: float
    box_radius: float
    kind: VerdictKind = VerdictKind.INCONCLUSIVE


Verdict = Union[NumericallyNonnegative, Counterexample, Inconclusive]


def _split(x: Sequence[float], blocks: Sequence[int]):
    out, pos = [], 0
    for b in blocks:
        out.append((x[pos : pos + b], x[pos + b : pos + 2 * b]))
        pos += 2 * b
    return out


def _local_search(fphi: _FloatPhi, blocks, x0: np.ndarray, radius: float, maxiter: int):
    def unpack(x):
        ss, ts = [], []
        for sr, tr in _split(x.tolist(), blocks):
            ss.append(project_simplex(sr))
            ts.append([min(max(v, -radius), radius) for v in tr])
        return ss, ts

    def objective(x):
        ss, ts = unpack(x)
        return fphi(ss, ts)

    res = minimize(objective, x0, method="Nelder-Mead", options={"maxiter": maxiter, "xatol": 1e-9, "fatol": 1e-13})
    ss, ts = unpack(res.x)
    return fphi(ss, ts), ss, ts


def _starts(blocks, budget: int, radius: float, seed: int) -> List[np.ndarray]:
    rng = np.random.default_rng(seed)
    starts = []
    for i in range(budget):
        parts = []
        for b in blocks:
            if i == 0:
                s = np.full(b, 1.0 / b)
                t = np.linspace(-radius, radius, b) if b > 1 else np.array([radius])
            else:
                s = rng.dirichlet(np.ones(b))
                t = rng.uniform(-radius, radius, size=b)
            parts.extend([s, t])
        starts.append(np.concatenate(parts))
    return starts


def _apportion(s: Sequence[float], n: int) -> Tuple[int, ...]:
    """Integer multiplicities summing to ``n`` with ``alpha/n`` close to ``s`` (largest remainder)."""
    raw = [max(v, 0.0) * n for v in s]
    total = sum(raw) or 1.0
    raw = [r * n / total for r in raw]
    base = [math.floor(r) for r in raw]
    order = sorted(range(len(s)), key=lambda i: (-(raw[i] - base[i]), i))
    for i in order[: n - sum(base)]:
        base[i] += 1
    return tuple(base)


_DENOMINATORS = (1, 2, 3, 4, 5, 6, 8, 10, 12, 100, 1000, 10**4, 10**6)


def _certify(phi: PhiFunction, ss, ts, max_n: int) -> Optional[Counterexample]:
    """Round a numeric minimiser to an exact negative value of some ``f_n``."""
    ts = [np.asarray(t, dtype=float) for t in ts]
    if phi.homogeneous:
        scale = max((float(np.max(np.abs(t))) for t in ts if len(t)), default=0.0)
        if scale > 0:
            ts = [t / scale for t in ts]
    for q in _DENOMINATORS:
        tq = [tuple(Fraction(round(v * q), q) for v in t) for t in ts]
        for n in range(1, max_n + 1):
            alphas = [_apportion(s, n) for s in ss]
            s_exact = [tuple(Fraction(a, n) for a in alpha) for alpha in alphas]
            value = phi.evaluate_groups(s_exact, tq)
            if value < 0:
                point = tuple(
                    tuple(sorted((v for v, a in zip(t, alpha) for _ in range(a)), reverse=True))
                    for t, alpha in zip(tq, alphas)
                )
                direct = power_mean_value(phi, point)
                if direct != value:
                    raise AssertionError("Phi disagrees with the power mean polynomial")
                return Counterexample(tuple(s_exact), tuple(tq), value, tuple(n for _ in ss), point)
            if q > 12 and n > 64:
                break
    return None


# starts are processed in fixed batches so the verdict does not depend on --threads
_BATCH = 8


def _search_radius(phi: PhiFunction, cfg: SearchConfig, radius: float) -> Tuple[float, Optional[Counterexample]]:
    """Minimum found and, if some local minimum certifies, the first counterexample.

    After every batch the negative results are tried in order of value, ties
    broken by start index.
    """
    fphi = _FloatPhi(phi)
    blocks = phi.blocks
    starts = _starts(blocks, cfg.budget, radius, cfg.seed)
    threshold = cfg.tol * (1 + float(phi.coefficient_norm()) * max(1.0, radius) ** phi.degree)

    def job(x0):
        return _local_search(fphi, blocks, x0, radius, cfg.maxiter)

    pool = ThreadPoolExecutor(max_workers=cfg.threads) if cfg.threads > 1 else None
    best = math.inf
    try:
        for b in range(0, len(starts), _BATCH):
            chunk = starts[b : b + _BATCH]
            results = list(pool.map(job, chunk)) if pool else [job(x0) for x0 in chunk]
            best = min([best] + [r[0] for r in results])
            for value, ss, ts in sorted(results, key=lambda r: r[0]):
                if value >= -threshold:
                    break
                cert = _certify(phi, ss, ts, cfg.max_n)
                if cert is not None:
                    return value, cert
    finally:
        if pool:
            pool.shutdown()
    return best, None


def check_phi(phi: PhiFunction, config: SearchConfig = SearchConfig()) -> Verdict:
    radii = [config.box_radius]
    if config.retry_radius and not phi.homogeneous:
        # a homogeneous Phi scales with |t|, so a larger box changes nothing
        radii.append(config.retry_radius)
    best_min = math.inf
    for radius in radii:
        threshold = config.tol * (1 + float(phi.coefficient_norm()) * max(1.0, radius) ** phi.degree)
        minimum, cert = _search_radius(phi, config, radius)
        if cert is not None:
            return cert
        best_min = min(best_min, minimum)
        if minimum < -threshold:
            return Inconclusive(minimum, radius)
    return NumericallyNonnegative(best_min, radii[-1])


def check_power_mean_all_n(
    f: SymmetricPolynomial,
    budget: int = 64,
    box_radius: float = 10.0,
    tol: float = 1e-9,
    seed: int = 0,
    threads: int = 1,
) -> Verdict:
    """Decide numerically whether every power mean polynomial ``f_n`` is nonnegative."""
    phi = build_phi(f)
    return check_phi(phi, SearchConfig(budget=budget, box_radius=box_radius, tol=tol, seed=seed, threads=threads))
