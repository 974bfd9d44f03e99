"""Why the span check matters: two equivalence runs side by side.

First a four-state system where states x and z have the same trace measure.
The worklist explores pairs of weighted state vectors; after two recorded
pairs the next difference vector is already a scalar multiple of an earlier
one, so the span membership test discharges it and the run closes.

Then a pair of identical coin-flip loops.  They are obviously equivalent,
but the explored vectors halve forever, so the plain pair-lookup search
(naive) never repeats a pair and burns through any budget, while the span
check closes after recording a single pair.
"""

import json

from ptstrace import build_rep, hkc_inf, naive, parse_pts

FOUR_STATE = {
    "alphabet": ["a"],
    "states": ["x", "y", "z", "i"],
    "transitions": {
        "x": {"stop": "1/3",
              "moves": [{"letter": "a", "to": "y", "p": "1/6"},
                        {"letter": "a", "to": "i", "p": "1/2"}]},
        "y": {"stop": "2/3",
              "moves": [{"letter": "a", "to": "y", "p": "1/3"}]},
        "z": {"stop": "1/3",
              "moves": [{"letter": "a", "to": "z", "p": "1/3"},
                        {"letter": "a", "to": "i", "p": "1/3"}]},
        "i": {"moves": [{"letter": "a", "to": "i", "p": "1"}]},
    },
}

rep = build_rep(parse_pts(json.dumps(FOUR_STATE)))
trace = []
result = hkc_inf(rep, "x", "z", trace=trace)
print("hkc_inf(x, z) on the four-state system:", result)
print("worklist extractions:")
for extraction in trace:
    word = ".".join(extraction.word) or "(empty)"
    status = "discharged by span check" if extraction.skipped else "outputs compared, recorded"
    print(f"  after {word:8} left={tuple(map(str, extraction.left))} "
          f"right={tuple(map(str, extraction.right))}  -> {status}")

HALF_LOOP = {
    "alphabet": ["a"],
    "states": ["x", "y"],
    "transitions": {
        "x": {"stop": "1/2", "moves": [{"letter": "a", "to": "x", "p": "1/2"}]},
        "y": {"stop": "1/2", "moves": [{"letter": "a", "to": "y", "p": "1/2"}]},
    },
}

rep2 = build_rep(parse_pts(json.dumps(HALF_LOOP)))
print("\nTwo identical coin-flip loops:")
print("  hkc_inf(x, y):", hkc_inf(rep2, "x", "y"))
print("  naive(x, y, max_steps=100):", naive(rep2, "x", "y", 100))
print("The explored vectors shrink by half each step, so the naive pair")
print("lookup never hits a repeat; the span check spots that (u/2, v/2)")
print("is a scaling of the recorded pair (u, v) and stops immediately.")
