"""Two states that agree on every finite word yet behave differently.

Both y and z loop forever, never stopping: every single finite word has
probability 0 from either of them, so any checker that only compares
finite-word masses calls them equivalent.  But y picks its letters evenly
while z prefers `a` 3:1, which shows up in the measures of infinite-word
sets: an infinite word starting with `b` is twice as likely from y as from
z.  Comparing the total-mass output as well separates them and produces the
one-letter counterexample.
"""

import json

from ptstrace import (Cone, FiniteWord, InfCone, build_rep, dirac,
                      hkc_finite, hkc_inf, measure, parse_pts)

SYSTEM = {
    "alphabet": ["a", "b"],
    "states": ["y", "z"],
    "transitions": {
        "y": {"moves": [{"letter": "a", "to": "y", "p": "1/2"},
                        {"letter": "b", "to": "y", "p": "1/2"}]},
        "z": {"moves": [{"letter": "a", "to": "z", "p": "3/4"},
                        {"letter": "b", "to": "z", "p": "1/4"}]},
    },
}

rep = build_rep(parse_pts(json.dumps(SYSTEM)))
y, z = dirac(rep, "y"), dirac(rep, "z")

print("Single finite words carry no mass from either state:")
for word in [(), ("a",), ("a", "b"), ("b", "b", "a")]:
    label = ".".join(word) or "(empty)"
    print(f"  word {label}: from y {measure(rep, y, FiniteWord(word))}, "
          f"from z {measure(rep, z, FiniteWord(word))}")

print("\nCones (finite or infinite continuations) differ immediately:")
for word in [("a",), ("b",)]:
    print(f"  cone {word[0]}:    from y {measure(rep, y, Cone(word))}, "
          f"from z {measure(rep, z, Cone(word))}")
    print(f"  infcone {word[0]}: from y {measure(rep, y, InfCone(word))}, "
          f"from z {measure(rep, z, InfCone(word))}")

print("\nDecision procedures:")
print("  full comparison   :", hkc_inf(rep, "y", "z"))
print("  finite words only :", hkc_finite(rep, "y", "z"))
print("The finite-only variant accepts the pair; the full variant refutes")
print("it on the word `a`, where the remaining total masses 1/2 and 3/4")
print("already disagree.")
