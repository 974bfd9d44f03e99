"""Generative probabilistic transition systems over exact rationals.

A system consists of a finite alphabet and a finite set of states.  Every
state carries one probability distribution split between *stopping* and
letter-labelled *moves* to successor states; the masses of a state must sum
to exactly 1.  All probabilities are `fractions.Fraction` values and every
computation in this package is exact -- nothing ever rounds.

The input format is a JSON document::

    {"alphabet": ["a", "b"],
     "states": ["x", "y"],
     "transitions": {
        "x": {"stop": "1/3",
              "moves": [{"letter": "a", "to": "y", "p": "1/6"},
                        {"letter": "a", "to": "x", "p": "1/2"}]},
        "y": {"stop": "1"}}}

Rationals are strings "p/q" or integer strings ("1", "0").  "stop" defaults
to "0".  Every declared state must appear under "transitions" (a state with
no entry has total mass 0, which fails the sums-to-1 check).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

Word = tuple[str, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")


class PtsFormatError(ValueError):
    """Base class for malformed documents and model violations."""


class MalformedRational(PtsFormatError):
    """A probability string is not "p/q" or an integer string."""


class ProbabilityOutOfRange(PtsFormatError):
    """A stored probability lies outside [0, 1]."""


class DistributionSumViolation(PtsFormatError):
    """A state's stop mass plus move masses do not sum to exactly 1."""

    def __init__(self, state: str, total: Fraction):
        super().__init__(f"state {state!r}: masses sum to {total}, expected 1")
        self.state = state
        self.total = total


class UnknownIdentifier(PtsFormatError):
    """A referenced state or letter was never declared."""


class DuplicateIdentifier(PtsFormatError):
    """A state, letter, or move entry occurs twice."""


# Violation kinds reported by validate().
PROBABILITY_OUT_OF_RANGE = "probability_out_of_range"
DISTRIBUTION_SUM = "distribution_sum"


@dataclass(frozen=True)
class Violation:
    """One broken model invariant, named by kind and offending state."""

    kind: str
    state: str
    message: str


@dataclass(frozen=True)
class Pts:
    """A probabilistic transition system.

    ``term`` maps each state to its stop probability; ``moves`` maps
    (source, letter, target) triples to probabilities, where an absent
    triple means probability 0.  State and letter order is taken from the
    declaration and is canonical: all vectors and matrices built downstream
    index states in this order, so outputs are reproducible.

    Instances are treated as immutable values after construction.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    term: dict[str, Fraction]
    moves: dict[tuple[str, str, str], Fraction]

    def stop(self, state: str) -> Fraction:
        return self.term.get(state, _ZERO)

    def move(self, source: str, letter: str, target: str) -> Fraction:
        return self.moves.get((source, letter, target), _ZERO)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer string into an exact Fraction."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise MalformedRational(f"not a rational string: {text!r}")
    num, _, den = text.partition("/")
    if den == "":
        return Fraction(int(num))
    if int(den) == 0:
        raise MalformedRational(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den))


def format_rational(value: Fraction) -> str:
    """Lowest-terms "p/q", or plain integer string when the value is integral."""
    return str(value)


def _identifier_list(doc: dict, key: str) -> list[str]:
    items = doc.get(key)
    if not isinstance(items, list):
        raise PtsFormatError(f'"{key}" must be a list')
    seen = set()
    for item in items:
        if not isinstance(item, str) or not item:
            raise PtsFormatError(f'"{key}" entries must be non-empty strings, got {item!r}')
        if item in seen:
            raise DuplicateIdentifier(f"{key[:-1]} {item!r} declared twice")
        seen.add(item)
    return items


def pts_from_dict(doc: object, check: bool = True) -> Pts:
    """Build a Pts from a decoded document, raising on the first problem.

    With ``check=False`` only structural errors raise; numeric invariants
    (range, sums-to-1) are left for validate() to report in full.
    """
    if not isinstance(doc, dict):
        raise PtsFormatError("document root must be a JSON object")
    alphabet = _identifier_list(doc, "alphabet")
    states = _identifier_list(doc, "states")
    transitions = doc.get("transitions")
    if not isinstance(transitions, dict):
        raise PtsFormatError('"transitions" must be an object')
    state_set = set(states)
    letter_set = set(alphabet)
    for name in transitions:
        if name not in state_set:
            raise UnknownIdentifier(f"transitions entry for undeclared state {name!r}")

    term: dict[str, Fraction] = {}
    moves: dict[tuple[str, str, str], Fraction] = {}
    for state in states:
        entry = transitions.get(state, {})
        if not isinstance(entry, dict):
            raise PtsFormatError(f"transitions for state {state!r} must be an object")
        term[state] = parse_rational(entry.get("stop", "0"))
        move_items = entry.get("moves", [])
        if not isinstance(move_items, list):
            raise PtsFormatError(f'"moves" for state {state!r} must be a list')
        for item in move_items:
            if not isinstance(item, dict) or not {"letter", "to", "p"} <= item.keys():
                raise PtsFormatError(
                    f"move entries for state {state!r} need letter/to/p fields")
            letter, target = item["letter"], item["to"]
            if letter not in letter_set:
                raise UnknownIdentifier(f"state {state!r} moves on undeclared letter {letter!r}")
            if target not in state_set:
                raise UnknownIdentifier(f"state {state!r} moves to undeclared state {target!r}")
            key = (state, letter, target)
            if key in moves:
                raise DuplicateIdentifier(
                    f"duplicate move {letter!r} -> {target!r} for state {state!r}")
            moves[key] = parse_rational(item["p"])

    pts = Pts(tuple(alphabet), tuple(states), term, moves)
    if check:
        problems = validate(pts)
        if problems:
            first = problems[0]
            if first.kind == DISTRIBUTION_SUM:
                raise DistributionSumViolation(first.state, _state_mass(pts, first.state))
            raise ProbabilityOutOfRange(f"state {first.state!r}: {first.message}")
    return pts


def parse_pts(text: str, check: bool = True) -> Pts:
    """Parse and validate a JSON document into a Pts."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PtsFormatError(f"invalid JSON: {exc}") from exc
    return pts_from_dict(doc, check=check)


def _state_mass(pts: Pts, state: str) -> Fraction:
    total = pts.stop(state)
    for letter in pts.alphabet:
        for target in pts.states:
            total += pts.move(state, letter, target)
    return total


def validate(pts: Pts) -> list[Violation]:
    """Check every model invariant; the list is empty iff all of them hold."""
    violations = []
    for state in pts.states:
        stop = pts.stop(state)
        if not _ZERO <= stop <= _ONE:
            violations.append(Violation(
                PROBABILITY_OUT_OF_RANGE, state,
                f"stop probability {stop} outside [0, 1]"))
        total = stop
        for letter in pts.alphabet:
            for target in pts.states:
                p = pts.moves.get((state, letter, target))
                if p is None:
                    continue
                if not _ZERO <= p <= _ONE:
                    violations.append(Violation(
                        PROBABILITY_OUT_OF_RANGE, state,
                        f"move {letter!r} -> {target!r} has probability {p} outside [0, 1]"))
                total += p
        if total != _ONE:
            violations.append(Violation(
                DISTRIBUTION_SUM, state, f"masses sum to {total}, expected 1"))
    return violations


def pts_to_dict(pts: Pts) -> dict:
    """Canonical document form: moves listed in alphabet order, then target order."""
    transitions = {}
    for state in pts.states:
        entry: dict = {"stop": format_rational(pts.stop(state))}
        move_items = []
        for letter in pts.alphabet:
            for target in pts.states:
                p = pts.moves.get((state, letter, target))
                if p is not None:
                    move_items.append(
                        {"letter": letter, "to": target, "p": format_rational(p)})
        if move_items:
            entry["moves"] = move_items
        transitions[state] = entry
    return {"alphabet": list(pts.alphabet),
            "states": list(pts.states),
            "transitions": transitions}


def serialize_pts(pts: Pts) -> str:
    """Render the canonical JSON document; parse_pts inverts this exactly."""
    return json.dumps(pts_to_dict(pts), indent=2) + "\n"
