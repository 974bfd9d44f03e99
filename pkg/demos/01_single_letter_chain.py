"""Measures of word sets for a two-state single-letter system.

State y stops with probability 1/3, loops on `a` with 1/3, and with the
remaining 1/3 falls into x, which loops on `a` forever.  Running the system
from y therefore emits some number of a's and then either stops or loops
silently for good, and every quantity below comes out as an exact rational.
"""

import json
from fractions import Fraction

from ptstrace import (AllFinite, AllInfinite, Cone, FiniteWord, InfCone,
                      build_rep, dirac, finite_mass_vector, measure,
                      parse_pts)

SYSTEM = {
    "alphabet": ["a"],
    "states": ["x", "y"],
    "transitions": {
        "x": {"moves": [{"letter": "a", "to": "x", "p": "1"}]},
        "y": {"stop": "1/3",
              "moves": [{"letter": "a", "to": "x", "p": "1/3"},
                        {"letter": "a", "to": "y", "p": "1/3"}]},
    },
}

rep = build_rep(parse_pts(json.dumps(SYSTEM)))
y = dirac(rep, "y")

print("Mass of single words a^n from y (expected 1/3^(n+1)):")
for n in range(6):
    value = measure(rep, y, FiniteWord(("a",) * n))
    print(f"  n={n}:  {value}")

print("\nMass of the cone a^n(everything) from y (expected (1+3^-n)/2):")
for n in range(6):
    value = measure(rep, y, Cone(("a",) * n))
    print(f"  n={n}:  {value}")

print("\nSplitting the unit of mass from y:")
print("  all finite words :", measure(rep, y, AllFinite()))
print("  all infinite words:", measure(rep, y, AllInfinite()))

# The infinite part is the chance of eventually drifting into the silent x
# loop: sum of 1/3^(n+1) over n, which is 1/2.
assert measure(rep, y, AllInfinite()) == Fraction(1, 2)

print("\nPer-state stopping masses (least fixed point):", finite_mass_vector(rep))
print("Infinite words that start with one a, from y:",
      measure(rep, y, InfCone(("a",))))
