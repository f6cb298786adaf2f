"""Scan harness for Vojta-style weighted-GCD inequalities, plus the
log-hwgcd singularity audit.

For each integral tuple x with weighted GCD 1 and no zero coordinate,
the scan compares

    lhs = wgcd(f_1(x), ..., f_t(x))              (gcd weights per config)
    rhs = max_i(|x_i|^{1/q_i})^epsilon
          * s_part(|x_0 ... x_n|, S)^(1/(q*(r-1+delta)))

with q the product of the weights and r the generator count (or an
explicit codimension override).  Rows are deterministic: fixed
enumeration order, no timestamps or randomness in the serialized
output.  The domain is split into chunks evaluated by a pure function
and merged in order, so chunks may safely run concurrently.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .arith import s_part
from .errors import DegenerateGenerators, EmptyDomain, IllFormedWeights
from .gcdops import Subscheme, log_hwgcd, wgcd
from .points import WPoint, sign_canon
from .singular import is_singular
from .weights import Weights

_CHUNK = 4096


@dataclass(frozen=True)
class BoxDomain:
    """Per-coordinate inclusive integer bounds."""

    bounds: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for lo, hi in self.bounds:
            if lo > hi:
                raise ValueError(f"empty bound {lo}..{hi}")

    @classmethod
    def symmetric(cls, radius: int, n_coords: int) -> "BoxDomain":
        return cls(((-radius, radius),) * n_coords)


@dataclass(frozen=True)
class SUnitGrid:
    """x_0 = 1 and the remaining coordinates range over S-units <= max_value."""

    primes: tuple[int, ...]
    max_value: int

    def __post_init__(self):
        if self.max_value < 1:
            raise ValueError("S-unit grid needs max_value >= 1")
        if not self.primes:
            raise ValueError("S-unit grid needs at least one prime")


Domain = Union[BoxDomain, SUnitGrid]


@dataclass(frozen=True)
class ScanConfig:
    weights: Weights
    subscheme: Subscheme
    epsilon: Fraction
    delta: Fraction
    s_primes: frozenset[int]
    domain: Domain
    codim: int | None = None
    metric_mode: str = "paper"

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.delta < 0:
            raise ValueError("delta must be non-negative")
        if self.subscheme.ambient_weights != self.weights:
            raise ValueError("subscheme generators must use the scan weights")
        if self.metric_mode not in ("paper", "alt"):
            raise ValueError("metric_mode must be 'paper' or 'alt'")
        if self.r - 1 + self.delta <= 0:
            raise ValueError(
                "the rhs exponent needs r - 1 + delta > 0 "
                "(the inequality assumes codimension >= 2)"
            )

    @property
    def r(self) -> int:
        return self.codim if self.codim is not None else len(self.subscheme.generators)


@dataclass(frozen=True)
class ScanRow:
    point: tuple[int, ...]
    lhs: int
    rhs: float
    ratio: float
    exceptional: bool


@dataclass
class ScanReport:
    config: ScanConfig
    rows: list[ScanRow]
    total_candidates: int
    skipped_on_subscheme: int
    exceptional_count: int
    max_ratio: float | None
    runtime_seconds: float  # in-memory only; never serialized


def s_units(primes: Sequence[int], max_value: int) -> list[int]:
    """All integers >= 1 composed of the given primes, up to max_value,
    ascending."""
    values = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for v in frontier:
            for p in primes:
                u = v * p
                if u <= max_value and u not in values:
                    values.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(values)


def _enumerate_box(config: ScanConfig, domain: BoxDomain) -> Iterator[tuple[int, ...]]:
    if len(domain.bounds) != len(config.weights):
        raise ValueError("box bounds must match the number of coordinates")
    ranges = [range(lo, hi + 1) for lo, hi in domain.bounds]
    for point in itertools.product(*ranges):
        if 0 in point:
            continue  # the prime-to-S part of 0 is undefined
        if wgcd(point, config.weights) != 1:
            continue
        yield point


def _enumerate_sunit(config: ScanConfig, domain: SUnitGrid) -> Iterator[tuple[int, ...]]:
    units = s_units(domain.primes, domain.max_value)
    n_free = len(config.weights) - 1
    for tail in itertools.product(units, repeat=n_free):
        yield (1,) + tail


def candidate_points(config: ScanConfig) -> Iterator[tuple[int, ...]]:
    if isinstance(config.domain, BoxDomain):
        return _enumerate_box(config, config.domain)
    return _enumerate_sunit(config, config.domain)


def evaluate_point(config: ScanConfig, point: tuple[int, ...]) -> ScanRow | None:
    """One scan row, or None when every generator vanishes there."""
    values = config.subscheme.values_at(point)
    if all(v == 0 for v in values):
        return None
    lhs = wgcd(values, config.subscheme.gcd_weights)
    log_max = max(math.log(abs(v)) / q for v, q in zip(point, config.weights.q))
    product = 1
    for v in point:
        product *= v
    stripped = s_part(product, config.s_primes)
    exponent = 1.0 / (config.weights.qprod * (config.r - 1 + float(config.delta)))
    log_rhs = float(config.epsilon) * log_max + math.log(stripped) * exponent
    rhs = math.exp(log_rhs)
    ratio = lhs / rhs
    return ScanRow(point, lhs, rhs, ratio, lhs > rhs)


def _evaluate_chunk(args: tuple[ScanConfig, list[tuple[int, ...]]]) -> list[ScanRow | None]:
    config, chunk = args
    return [evaluate_point(config, point) for point in chunk]


def _chunks(points: Iterable[tuple[int, ...]]) -> Iterator[list[tuple[int, ...]]]:
    chunk: list[tuple[int, ...]] = []
    for point in points:
        chunk.append(point)
        if len(chunk) >= _CHUNK:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def vojta_scan(config: ScanConfig, workers: int = 1) -> ScanReport:
    """Tabulate the inequality over the configured domain.

    Chunks are evaluated by a pure function and merged in enumeration
    order, so the report is identical for any worker count.
    """
    started = time.perf_counter()
    total = 0
    skipped = 0
    rows: list[ScanRow] = []
    chunk_iter = _chunks(candidate_points(config))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(
                _evaluate_chunk, ((config, chunk) for chunk in chunk_iter)
            )
            for batch in results:
                for row in batch:
                    total += 1
                    if row is None:
                        skipped += 1
                    else:
                        rows.append(row)
    else:
        for chunk in chunk_iter:
            for row in _evaluate_chunk((config, chunk)):
                total += 1
                if row is None:
                    skipped += 1
                else:
                    rows.append(row)
    if total == 0:
        raise EmptyDomain("no candidate points in the configured domain")
    if not rows:
        raise DegenerateGenerators(
            "the generators vanish at every candidate point"
        )
    exceptional = sum(1 for row in rows if row.exceptional)
    max_ratio = max(row.ratio for row in rows)
    return ScanReport(
        config=config,
        rows=rows,
        total_candidates=total,
        skipped_on_subscheme=skipped,
        exceptional_count=exceptional,
        max_ratio=max_ratio,
        runtime_seconds=time.perf_counter() - started,
    )


# ---------------------------------------------------------------------------
# log-hwgcd singularity audit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AuditRow:
    point: tuple[int, ...]
    log_hwgcd_zero: bool
    singular: bool
    counterexample: bool
    valuations: tuple[tuple[int, tuple[int, ...], int], ...]
    # (prime, per-coordinate floor(nu+/q), min) for each contributing prime


@dataclass
class AuditReport:
    weights: Weights
    bound: int
    total_points: int
    zero_loghwgcd: int
    singular_points: int
    counterexamples: list[AuditRow]
    runtime_seconds: float


def _canonical_points(w: Weights, bound: int) -> Iterator[tuple[int, ...]]:
    """Normalized integral representatives with |x_i| <= bound: weighted
    GCD 1 and the odd-weight sign canon, in lexicographic order."""
    for point in itertools.product(range(-bound, bound + 1), repeat=len(w)):
        if all(v == 0 for v in point):
            continue
        if wgcd(point, w) != 1:
            continue
        wpoint = WPoint.of(point, w)
        if sign_canon(wpoint).coords != wpoint.coords:
            continue
        yield point


def _valuation_table(point: tuple[int, ...], w: Weights):
    from .arith import factorize, ord_int

    primes: set[int] = set()
    for v in point:
        if v != 0:
            primes.update(factorize(v).primes())
    table = []
    for p in sorted(primes):
        floors = tuple(
            ord_int(v, p) // q if v != 0 else -1  # -1 marks +infinity
            for v, q in zip(point, w.q)
        )
        finite = [f for f in floors if f >= 0]
        table.append((p, floors, min(finite) if finite else -1))
    return tuple(table)


def sing1_audit(w: Weights, bound: int) -> AuditReport:
    """Check "log hwgcd = 0 implies singular" on a coordinate box.

    Enumerates normalized integral points with coordinates bounded by
    ``bound`` and reports every point where the implication fails, with
    its per-prime valuation floors.  The report is exploratory: it
    documents the implication's scope rather than assuming it.
    """
    if not w.is_well_formed():
        raise IllFormedWeights(f"weights {w} are not well-formed")
    started = time.perf_counter()
    total = 0
    zero_count = 0
    singular_count = 0
    counterexamples: list[AuditRow] = []
    for point in _canonical_points(w, bound):
        total += 1
        value = log_hwgcd(point, w, include_archimedean=True)
        is_zero = value.is_zero()
        singular = is_singular(WPoint.of(point, w))
        if is_zero:
            zero_count += 1
        if singular:
            singular_count += 1
        if is_zero and not singular:
            counterexamples.append(
                AuditRow(
                    point=point,
                    log_hwgcd_zero=True,
                    singular=False,
                    counterexample=True,
                    valuations=_valuation_table(point, w),
                )
            )
    return AuditReport(
        weights=w,
        bound=bound,
        total_points=total,
        zero_loghwgcd=zero_count,
        singular_points=singular_count,
        counterexamples=counterexamples,
        runtime_seconds=time.perf_counter() - started,
    )
