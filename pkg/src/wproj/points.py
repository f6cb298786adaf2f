"""Weighted projective points over Q.

Two coordinate tuples name the same point when one is obtained from the
other by the action lambda * (x_0,...,x_n) = (lambda^{q_0} x_0, ...,
lambda^{q_n} x_n) for a nonzero rational lambda.  Over Q the only roots
of unity are +/-1, so every orbit in a well-formed space has a unique
integral representative with weighted GCD 1 once a sign convention is
fixed: the first nonzero coordinate of odd weight is made positive
(on even-weight coordinates -1 acts trivially).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .arith import RationalLike, as_fraction
from .errors import (
    AllZero,
    ArityMismatch,
    IllFormedWeights,
    ParseError,
    WeightMismatch,
    ZeroScalar,
)
from .gcdops import wgcd
from .weights import WeightMap, Weights, veronese_data


@dataclass(frozen=True)
class WPoint:
    """A point of a weighted projective space over Q."""

    coords: tuple[Fraction, ...]
    weights: Weights

    def __post_init__(self):
        coords = tuple(as_fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != len(self.weights):
            raise ArityMismatch(
                f"{len(coords)} coordinates for {len(self.weights)} weights"
            )
        if all(c == 0 for c in coords):
            raise AllZero("a projective point needs a nonzero coordinate")

    @classmethod
    def of(cls, coords: Sequence[RationalLike], weights: Weights) -> "WPoint":
        return cls(tuple(as_fraction(c) for c in coords), weights)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c != 0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __str__(self) -> str:
        return "[" + ":".join(_format_rational(c) for c in self.coords) + "]"


def _format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_POINT_RE = re.compile(r"^\s*\[\s*(.*?)\s*\]\s*$")
_COORD_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_point(text: str, weights: Weights) -> WPoint:
    """Parse "[a0:a1:...:an]" with integer or "p/q" entries."""
    coords = parse_coords(text)
    return WPoint(coords, weights)


def parse_coords(text: str) -> tuple[Fraction, ...]:
    match = _POINT_RE.match(text)
    if not match:
        raise ParseError(f"cannot parse point from {text!r}")
    parts = [part.strip() for part in match.group(1).split(":")]
    if not parts or any(not part for part in parts):
        raise ParseError(f"cannot parse point from {text!r}")
    out = []
    for part in parts:
        if not _COORD_RE.match(part):
            raise ParseError(f"bad coordinate {part!r}")
        out.append(Fraction(part))
    return tuple(out)


def scale(x: WPoint, lam: RationalLike) -> WPoint:
    """Apply the coordinate action: coordinate i is multiplied by lam^{q_i}."""
    lam = as_fraction(lam)
    if lam == 0:
        raise ZeroScalar("scaling by 0 leaves the space")
    coords = tuple(c * lam ** q for c, q in zip(x.coords, x.weights.q))
    return WPoint(coords, x.weights)


def apply_weight_map(x: WPoint, wmap: WeightMap) -> WPoint:
    if x.weights != wmap.source:
        raise WeightMismatch("point does not live in the map's source")
    return WPoint(wmap.map_coords(x.coords), wmap.target)


def normalize(x: WPoint) -> WPoint:
    """Unique integral representative with weighted GCD 1 and sign canon.

    First scale by the lcm of coordinate denominators (staying inside
    the orbit), then divide out the weighted GCD, then fix the sign.
    Requires well-formed weights for uniqueness.
    """
    if not x.weights.is_well_formed():
        raise IllFormedWeights(f"weights {x.weights} are not well-formed")
    q = x.weights.q
    lam = math.lcm(*(c.denominator for c in x.coords))
    ints = [c * Fraction(lam) ** qi for c, qi in zip(x.coords, q)]
    g = wgcd(ints, x.weights)
    reduced = tuple(c / Fraction(g) ** qi for c, qi in zip(ints, q))
    return sign_canon(WPoint(reduced, x.weights))


def sign_canon(x: WPoint) -> WPoint:
    """Representative with the first nonzero odd-weight coordinate positive."""
    for c, qi in zip(x.coords, x.weights.q):
        if c != 0 and qi % 2 == 1:
            if c < 0:
                flipped = tuple(
                    cc * (-1) ** qq for cc, qq in zip(x.coords, x.weights.q)
                )
                return WPoint(flipped, x.weights)
            return x
    return x


def _rational_nth_roots(ratio: Fraction, n: int) -> list[Fraction]:
    """All rational solutions of lam^n = ratio (at most two)."""
    if n % 2 == 0 and ratio < 0:
        return []
    num, den = abs(ratio.numerator), ratio.denominator
    rnum, exact = sympy.integer_nthroot(num, n)
    if not exact:
        return []
    rden, exact = sympy.integer_nthroot(den, n)
    if not exact:
        return []
    root = Fraction(int(rnum), int(rden))
    if n % 2 == 1:
        return [root if ratio > 0 else -root]
    return [root, -root]


def equals(x: WPoint, y: WPoint) -> bool:
    """Orbit equality: is y = lam * x for some nonzero rational lam?

    Zero patterns must match; candidate lambdas are the rational q_i-th
    roots of y_i/x_i at a pivot coordinate, each verified everywhere.
    """
    if x.weights != y.weights:
        raise WeightMismatch("points live in different weighted spaces")
    if x.support() != y.support():
        return False
    pivot = x.support()[0]
    q = x.weights.q
    ratio = y.coords[pivot] / x.coords[pivot]
    for lam in _rational_nth_roots(ratio, q[pivot]):
        if all(yc == xc * lam ** qi for xc, yc, qi in zip(x.coords, y.coords, q)):
            return True
    return False


def veronese(x: WPoint) -> tuple[int, ...]:
    """Image of the point under the power map x_i -> x_i^{m/q_i},
    reduced to coprime integer coordinates with the sign canon of
    ordinary projective space (first nonzero coordinate positive)."""
    exps = veronese_data(x.weights).exps
    image = tuple(c ** e for c, e in zip(x.coords, exps))
    return reduce_projective(image)


def reduce_projective(coords: Sequence[RationalLike]) -> tuple[int, ...]:
    """Coprime-integer canonical form of an ordinary projective point."""
    vals = [as_fraction(c) for c in coords]
    if all(v == 0 for v in vals):
        raise AllZero("a projective point needs a nonzero coordinate")
    lam = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * lam) for v in vals]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-u for u in ints]
            break
    return tuple(ints)
