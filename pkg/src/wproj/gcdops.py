"""Weighted greatest common divisors and their logarithmic variants.

The weighted GCD of an integer tuple is the product over primes p of
p^min_i(floor(ord_p(x_i)/q_i)); zero coordinates contribute +infinity
to the min.  The generalized (h-) variants use the non-negative part
of the valuation and extend to rational tuples.  ``t_nu`` is the same
min at a single place, and ``hwgcd_subscheme`` applies the log weighted
GCD to the values of a subscheme's generators at a point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .arith import (
    LogValue,
    Place,
    RationalLike,
    as_fraction,
    factorize,
    ord_int,
    val_plus,
)
from .errors import (
    AllZero,
    ArityMismatch,
    MixedDegree,
    NonIntegralValue,
    NotNormalized,
    PointOnSubscheme,
)
from .weights import Weights
from .wpoly import MIXED, WPolynomial, evaluate, weighted_degree

if TYPE_CHECKING:  # only for annotations; points imports this module
    from .points import WPoint


@dataclass(frozen=True)
class Subscheme:
    """Closed subscheme data: generators plus per-generator GCD weights.

    ``gcd_weights`` defaults to the generators' weighted degrees (the
    orbit-stable choice, since f_j scales with exponent deg f_j under
    the coordinate action).  Mixed-degree generators are allowed but
    then the GCD weights must be supplied explicitly.
    """

    generators: tuple[WPolynomial, ...]
    gcd_weights: Weights = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a subscheme needs at least one generator")
        ambient = self.generators[0].weights
        for g in self.generators:
            if g.is_zero():
                raise ValueError("zero polynomial cannot generate a subscheme")
            if g.weights != ambient:
                raise ArityMismatch("generators must share one weight tuple")
        if self.gcd_weights is None:
            degrees = []
            for g in self.generators:
                d = weighted_degree(g)
                if d is MIXED:
                    raise MixedDegree(
                        "mixed-degree generator: supply gcd_weights explicitly"
                    )
                degrees.append(max(int(d), 1))
            object.__setattr__(self, "gcd_weights", Weights(tuple(degrees)))
        elif len(self.gcd_weights) != len(self.generators):
            raise ArityMismatch("need one gcd weight per generator")

    @property
    def ambient_weights(self) -> Weights:
        return self.generators[0].weights

    def has_mixed_generator(self) -> bool:
        return any(weighted_degree(g) is MIXED for g in self.generators)

    def intersect(self, other: "Subscheme") -> "Subscheme":
        """Scheme intersection: concatenate generator lists."""
        return Subscheme(
            self.generators + other.generators,
            Weights(self.gcd_weights.q + other.gcd_weights.q),
        )

    def scheme_sum(self, other: "Subscheme") -> "Subscheme":
        """Scheme sum (ideal product): pairwise generator products."""
        gens = []
        gw = []
        for f, df in zip(self.generators, self.gcd_weights.q):
            for g, dg in zip(other.generators, other.gcd_weights.q):
                gens.append(f * g)
                gw.append(df + dg)
        return Subscheme(tuple(gens), Weights(tuple(gw)))

    def values_at(self, coords: Sequence[RationalLike]) -> tuple[Fraction, ...]:
        return tuple(evaluate(g, coords) for g in self.generators)


def _normalize_tuple(xs: Sequence[RationalLike], w: Weights) -> list[Fraction]:
    if len(xs) != len(w):
        raise ArityMismatch(f"expected {len(w)} values, got {len(xs)}")
    vals = [as_fraction(x) for x in xs]
    if all(v == 0 for v in vals):
        raise AllZero("weighted gcd of the all-zero tuple is undefined")
    return vals


def _integer_tuple(xs: Sequence[RationalLike], w: Weights) -> list[int]:
    out = []
    for v in _normalize_tuple(xs, w):
        if v.denominator != 1:
            raise NonIntegralValue(f"{v} is not an integer")
        out.append(v.numerator)
    return out


def _wgcd_exponents(ints: Sequence[int], w: Weights) -> dict[int, int]:
    """Map p -> min_i floor(ord_p(x_i)/q_i) over primes with positive min."""
    nonzero = [(abs(v), q) for v, q in zip(ints, w.q) if v != 0]
    g = 0
    for v, _ in nonzero:
        g = math.gcd(g, v)
    if g == 1:
        return {}
    exponents: dict[int, int] = {}
    for p, _ in factorize(g).factors:
        e = min(ord_int(v, p) // q for v, q in nonzero)
        if e > 0:
            exponents[p] = e
    return exponents


def wgcd(xs: Sequence[RationalLike], w: Weights) -> int:
    """Weighted GCD of an integer tuple (not all zero)."""
    ints = _integer_tuple(xs, w)
    result = 1
    for p, e in _wgcd_exponents(ints, w).items():
        result *= p ** e
    return result


def log_wgcd(xs: Sequence[RationalLike], w: Weights) -> LogValue:
    """Exact formal sum sum_p min_i(floor(ord_p(x_i)/q_i)) * log p."""
    ints = _integer_tuple(xs, w)
    return LogValue({p: Fraction(e) for p, e in _wgcd_exponents(ints, w).items()})


def _hwgcd_exponents(vals: Sequence[Fraction], w: Weights) -> dict[int, int]:
    """Finite-place exponents of the generalized weighted GCD (nu-plus)."""
    nonzero = [(v, q) for v, q in zip(vals, w.q) if v != 0]
    g = 0
    for v, _ in nonzero:
        g = math.gcd(g, abs(v.numerator))
    if g == 1:
        return {}
    exponents: dict[int, int] = {}
    for p, _ in factorize(g).factors:
        e = min(max(ord_int(v.numerator, p) - ord_int(v.denominator, p), 0) // q
                for v, q in nonzero)
        if e > 0:
            exponents[p] = e
    return exponents


def hwgcd(xs: Sequence[RationalLike], w: Weights) -> int:
    """Generalized weighted GCD of a rational tuple: finite places only,
    with the non-negative valuation part.  Always a positive integer."""
    vals = _normalize_tuple(xs, w)
    result = 1
    for p, e in _hwgcd_exponents(vals, w).items():
        result *= p ** e
    return result


def log_hwgcd(
    xs: Sequence[RationalLike], w: Weights, include_archimedean: bool = False
) -> LogValue:
    """Exact log of the generalized weighted GCD.

    The finite part is sum_p min_i(floor(nu_p+(x_i)/q_i)) * log p.  With
    ``include_archimedean`` the term min_i(nu_oo+(x_i)/q_i) is added
    WITHOUT the floor; nu_oo+(x) = max(-log|x|, 0) decomposes exactly
    into prime logs, and the min is selected by exact comparison.
    """
    vals = _normalize_tuple(xs, w)
    total = LogValue({p: Fraction(e) for p, e in _hwgcd_exponents(vals, w).items()})
    if include_archimedean:
        candidates = [
            Fraction(1, q) * LogValue.of_rational(max(Fraction(1, 1) / abs(v), 1))
            for v, q in zip(vals, w.q)
            if v != 0
        ]
        total = total + min(candidates)
    return total


def t_nu(x: "WPoint", place: Place) -> int:
    """min_i floor(nu+(x_i)/q_i) at one place; zero coordinates absorb
    to +infinity.  The floor applies at the archimedean place too."""
    best: int | None = None
    for coord, q in zip(x.coords, x.weights.q):
        nu = val_plus(coord, place)
        if math.isinf(nu):
            continue
        term = int(nu) // q if place.is_finite else math.floor(nu / q)
        if best is None or term < best:
            best = term
    if best is None:
        raise AllZero("t_nu of the all-zero tuple is undefined")
    return best


def hwgcd_subscheme(x: "WPoint", y: Subscheme) -> LogValue:
    """Log weighted GCD of the generator values at a normalized point.

    The point must be integral with weighted GCD 1 (the unique orbit
    representative); generator values must be integers.  If every
    generator vanishes the point lies on the subscheme.
    """
    if y.ambient_weights != x.weights:
        raise ArityMismatch("subscheme and point weights differ")
    coords = x.coords
    if any(c.denominator != 1 for c in coords):
        raise NotNormalized("point coordinates must be integers")
    if wgcd(coords, x.weights) != 1:
        raise NotNormalized("point must have weighted gcd 1")
    values = y.values_at(coords)
    if all(v == 0 for v in values):
        raise PointOnSubscheme("every generator vanishes at the point")
    for v in values:
        if v.denominator != 1:
            raise NonIntegralValue(f"generator value {v} is not an integer")
    return log_wgcd(values, y.gcd_weights)
