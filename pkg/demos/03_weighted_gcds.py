#!/usr/bin/env python3
"""Weighted GCDs: wgcd, the generalized variant, and subscheme values.

wgcd((x_0,...,x_n)) multiplies p^min_i(floor(ord_p(x_i)/q_i)) over
primes; it divides the ordinary gcd and reduces to it for unit weights.
The subscheme variant applies the log weighted GCD to the values of the
generators at a point.
"""

from fractions import Fraction

from wproj.gcdops import (
    Subscheme,
    hwgcd,
    hwgcd_subscheme,
    log_hwgcd,
    log_wgcd,
    wgcd,
)
from wproj.points import WPoint
from wproj.weights import Weights
from wproj.wpoly import parse_polynomial

w = Weights.of(2, 3)
print(f"wgcd((16,64), {w})  = {wgcd((16, 64), w)}")
print(f"wgcd((48,36), {w})  = {wgcd((48, 36), w)}")
print(f"wgcd((12,18), (1,1)) = {wgcd((12, 18), Weights.of(1, 1))}  (ordinary gcd)")
print(f"log wgcd((16,64))    = {float(log_wgcd((16, 64), w)):.12f} = log 4")

# the generalized variant clips negative valuations and accepts rationals
print(f"\nhwgcd((4, 8/3))      = {hwgcd((4, Fraction(8, 3)), w)}")
v = log_hwgcd((Fraction(1, 4), Fraction(1, 8)), w, include_archimedean=True)
print(f"log hwgcd(1/4, 1/8)  = {float(v):.12f} with archimedean term (= log 2)")

# generator values at a point, GCD-weighted by the generator degrees
w123 = Weights.of(1, 2, 3)
curve = Subscheme((
    parse_polynomial("x1-x0^2", w123),
    parse_polynomial("x2-x0^3", w123),
))
print(f"\ngenerators       : {[str(g) for g in curve.generators]}")
print(f"gcd weights      : {curve.gcd_weights}")
for coords in ((1, 5, 9), (1, 9, 27), (1, 17, 65)):
    x = WPoint.of(coords, w123)
    value = hwgcd_subscheme(x, curve)
    print(f"point {str(x):12s} -> log wgcd of generator values = {float(value):.6f}"
          f"   (formal: {value.coefficients()})")
