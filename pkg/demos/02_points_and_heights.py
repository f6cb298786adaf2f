#!/usr/bin/env python3
"""Weighted points: normalization, orbit equality, exact heights.

Heights are carried as the exact rational wh^m (m = lcm of weights), so
the scale-invariance and the Veronese identity wh^m = H(image) can be
checked with exact equality rather than floating-point tolerance.
"""

from fractions import Fraction

from wproj.heights import veronese_check, weil_height, wheight
from wproj.points import WPoint, equals, normalize, scale, veronese
from wproj.weights import Weights

w = Weights.of(2, 3)
x = WPoint.of((3, 4), w)

print(f"point            : {x} with weights {w}")
hv = wheight(x)
print(f"wh^m             : {hv.wh_pow_m}   (m = {hv.m})")
print(f"log height       : {hv.lwh:.12f}")
print("per-place factors:", [(str(p), str(f)) for p, f in hv.per_place])

# scaling the point does not move the height
y = scale(x, Fraction(7, 5))
print(f"\nscaled point     : {y}")
print(f"same height      : {wheight(y).wh_pow_m == hv.wh_pow_m}")
print(f"same orbit       : {equals(x, y)}")

# normalization produces the canonical integral representative
z = normalize(y)
print(f"normalized       : {z}")

# the Veronese identity, exactly
image = veronese(x)
print(f"\nveronese image   : {image}")
print(f"weil height      : {weil_height(image)[0]}")
lhs, rhs, equal = veronese_check(x)
print(f"wh^m == H(image) : {lhs} == {rhs} -> {equal}")
