#!/usr/bin/env python3
"""Weight tuples: reduction, well-forming, and the Veronese power map.

The running example is the weight tuple (2,4,6,10) of the genus-2
moduli invariants: its reduction is (1,2,3,5) and the power map into
ordinary projective space uses exponents (30,15,10,6).
"""

from wproj.weights import Weights, reduce, veronese_data, well_form, well_formed_model

w = Weights.of(2, 4, 6, 10)
print(f"weights          : {w}")
print(f"m = lcm          : {w.m}")
print(f"product          : {w.qprod}")
print(f"reduced?         : {w.is_reduced()}")

reduction = reduce(w)
print(f"\nreduction        : {w} -> {reduction.target}  via x_i -> x_i^{reduction.coord_exponents[0]}")

data = veronese_data(w)
print(f"veronese exps    : {data.exps}  (m = {data.m}, embedding = {data.is_embedding})")
print("the exponents are unchanged by reduction:",
      veronese_data(reduction.target).exps)

# a tuple that needs well-forming after reduction
w2 = Weights.of(2, 2, 3)
wm = well_form(w2)
print(f"\nwell-forming     : {w2} -> {wm.target}  via exponents {wm.coord_exponents}")

# the composite map in one call
composite = well_formed_model(Weights.of(4, 4, 6))
print(f"composite        : {composite.source} -> {composite.target} "
      f"via exponents {composite.coord_exponents}")
