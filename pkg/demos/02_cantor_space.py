"""A system whose infinite runs trace out the middle-thirds set.

The single live state emits ternary digits 0, 1, 2 with probability 1/3
each, and emitting a 1 ends the run.  A run goes on forever exactly when it
keeps avoiding the digit 1, so the infinite words it can produce are the
1-free digit streams.  Their total probability is 0, even though every
1-free cone has positive mass: the classic measure-zero-but-uncountable
situation, computed here exactly.
"""

import json
from fractions import Fraction

from ptstrace import (AllFinite, AllInfinite, Cone, FiniteWord, build_rep,
                      dirac, measure, parse_pts)

SYSTEM = {
    "alphabet": ["0", "1", "2"],
    "states": ["x", "y"],
    "transitions": {
        "x": {"moves": [{"letter": "0", "to": "x", "p": "1/3"},
                        {"letter": "2", "to": "x", "p": "1/3"},
                        {"letter": "1", "to": "y", "p": "1/3"}]},
        "y": {"stop": "1"},
    },
}

rep = build_rep(parse_pts(json.dumps(SYSTEM)))
x = dirac(rep, "x")

print("Cones of 1-free prefixes have mass (1/3)^length:")
for word in [(), ("0",), ("0", "2"), ("2", "2", "0")]:
    print(f"  cone {'.'.join(word) or '(empty)'}: {measure(rep, x, Cone(word))}")

print("\nA word is produced exactly when it is 1-free plus a final 1:")
for word in [("1",), ("0", "1"), ("0", "2", "1")]:
    print(f"  word {'.'.join(word)}: {measure(rep, x, FiniteWord(word))}")
print("  word 1.0 (a digit after the stop):",
      measure(rep, x, FiniteWord(("1", "0"))))

finite = measure(rep, x, AllFinite())
infinite = measure(rep, x, AllInfinite())
print("\nTotal mass on finite words:", finite)
print("Total mass on infinite words:", infinite)
assert finite == Fraction(1) and infinite == Fraction(0)
print("All the probability is spent on finite words, so the set of 1-free")
print("streams carries measure zero.")
