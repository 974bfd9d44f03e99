"""Trace-equivalence decision procedures on the determinized linear view.

Four variants share one FIFO worklist loop over configuration pairs and
differ only in how a candidate pair is discharged before its outputs are
compared: exact pair lookup (naive), equivalence closure via union-find
(hk), or membership of the difference vector in the linear span of
previously recorded differences (the hkc variants).  The span test is what
makes the hkc variants terminate on every finite system: each recorded
pair strictly increases the rank of the difference basis, and rank is
bounded by the dimension.  naive and hk can run forever on the weighted
state space and therefore require a step budget.

Checking both output rows (total mass and termination) decides equality of
the full measures on finite and infinite words; dropping the total-mass
comparison (hkc_finite) decides finite-trace equivalence only.

The breadth-first worklist and the declared alphabet order make runs
deterministic and counterexample words shortest possible.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .linear import Config, LinearRep, dirac, out_term, out_total, step
from .model import Word


class OutputKind(Enum):
    """Which output row a counterexample word separates."""

    TOTAL_MASS = "total_mass"
    TERMINATION = "termination"


@dataclass(frozen=True)
class Equivalent:
    iterations: int
    relation_size: int


@dataclass(frozen=True)
class NotEquivalent:
    witness: Word
    output: OutputKind
    lhs: Fraction
    rhs: Fraction
    iterations: int
    relation_size: int


@dataclass(frozen=True)
class Inconclusive:
    steps_exhausted: int
    relation_size: int


EquivResult = Equivalent | NotEquivalent | Inconclusive


@dataclass(frozen=True)
class Extraction:
    """One pair taken off the worklist, recorded for run inspection."""

    word: Word
    left: Config
    right: Config
    skipped: bool


class CongruenceBasis:
    """Reduced row-echelon basis of difference vectors.

    Spans the set of differences u - v over all pairs (u, v) in the
    congruence closure of the inserted pairs; a pair belongs to the closure
    exactly when its difference reduces to zero against the rows.  Rows are
    kept normalized (pivot entry 1, pivot column clear in every other row)
    with strictly increasing pivot indices, so runs are deterministic.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vector: list[Fraction]) -> list[Fraction]:
        for row, pivot in zip(self.rows, self.pivots):
            coefficient = vector[pivot]
            if coefficient:
                for j in range(pivot, self.dim):
                    if row[j]:
                        vector[j] -= coefficient * row[j]
        return vector

    def contains(self, u: Config, v: Config) -> bool:
        """True iff u - v lies in the span of the recorded differences."""
        difference = self._reduce([a - b for a, b in zip(u, v)])
        return not any(difference)

    def insert(self, u: Config, v: Config) -> bool:
        """Add u - v to the span; returns False when it was already inside."""
        residual = self._reduce([a - b for a, b in zip(u, v)])
        pivot = next((j for j, c in enumerate(residual) if c), None)
        if pivot is None:
            return False
        inv = residual[pivot]
        row = [c / inv for c in residual]
        for existing in self.rows:
            coefficient = existing[pivot]
            if coefficient:
                for j in range(self.dim):
                    if row[j]:
                        existing[j] -= coefficient * row[j]
        position = bisect_left(self.pivots, pivot)
        self.rows.insert(position, row)
        self.pivots.insert(position, pivot)
        return True


def basis_contains(basis: CongruenceBasis, u: Config, v: Config) -> bool:
    return basis.contains(u, v)


def basis_insert(basis: CongruenceBasis, u: Config, v: Config) -> CongruenceBasis:
    basis.insert(u, v)
    return basis


class _PairStore:
    """Exact pair lookup: the naive membership test."""

    def __init__(self):
        self._pairs: set[tuple[Config, Config]] = set()
        self.size = 0

    def subsumed(self, u: Config, v: Config) -> bool:
        return (u, v) in self._pairs

    def add(self, u: Config, v: Config) -> None:
        self._pairs.add((u, v))
        self.size += 1


class _EquivalenceStore:
    """Reflexive-symmetric-transitive closure via union-find over interned vectors."""

    def __init__(self):
        self._ids: dict[Config, int] = {}
        self._parent: list[int] = []
        self.size = 0

    def _intern(self, u: Config) -> int:
        node = self._ids.get(u)
        if node is None:
            node = len(self._parent)
            self._ids[u] = node
            self._parent.append(node)
        return node

    def _find(self, node: int) -> int:
        while self._parent[node] != node:
            self._parent[node] = self._parent[self._parent[node]]
            node = self._parent[node]
        return node

    def subsumed(self, u: Config, v: Config) -> bool:
        return self._find(self._intern(u)) == self._find(self._intern(v))

    def add(self, u: Config, v: Config) -> None:
        self._parent[self._find(self._intern(u))] = self._find(self._intern(v))
        self.size += 1


class _CongruenceStore:
    """Span membership over the accumulated difference basis."""

    def __init__(self, dim: int):
        self.basis = CongruenceBasis(dim)
        self.pairs: list[tuple[Config, Config]] = []

    @property
    def size(self) -> int:
        return len(self.pairs)

    def subsumed(self, u: Config, v: Config) -> bool:
        return self.basis.contains(u, v)

    def add(self, u: Config, v: Config) -> None:
        grew = self.basis.insert(u, v)
        assert grew, "pair inserted although already in the closure"
        self.pairs.append((u, v))


def _check_loop_invariant(rep: LinearRep, store: _CongruenceStore, todo) -> None:
    # every letter-successor of a recorded pair is discharged or still pending
    pending = {(u, v) for _, u, v in todo}
    for u, v in store.pairs:
        for letter in rep.alphabet:
            successor = (step(rep, u, letter), step(rep, v, letter))
            assert store.subsumed(*successor) or successor in pending, (
                "loop invariant violated: recorded pair has an unhandled successor")


def _decide(rep, x, y, store, *, check_total_mass, max_steps=None,
            trace=None, debug=False) -> EquivResult:
    todo = deque()
    todo.append(((), dirac(rep, x), dirac(rep, y)))
    iterations = 0
    while todo:
        if max_steps is not None and iterations >= max_steps:
            return Inconclusive(steps_exhausted=max_steps, relation_size=store.size)
        if debug:
            _check_loop_invariant(rep, store, todo)
        word, u, v = todo.popleft()
        iterations += 1
        if store.subsumed(u, v):
            if trace is not None:
                trace.append(Extraction(word, u, v, skipped=True))
            continue
        if trace is not None:
            trace.append(Extraction(word, u, v, skipped=False))
        if check_total_mass:
            lhs, rhs = out_total(rep, u), out_total(rep, v)
            if lhs != rhs:
                return NotEquivalent(word, OutputKind.TOTAL_MASS, lhs, rhs,
                                     iterations, store.size)
        lhs, rhs = out_term(rep, u), out_term(rep, v)
        if lhs != rhs:
            return NotEquivalent(word, OutputKind.TERMINATION, lhs, rhs,
                                 iterations, store.size)
        for letter in rep.alphabet:
            todo.append((word + (letter,), step(rep, u, letter), step(rep, v, letter)))
        store.add(u, v)
    return Equivalent(iterations=iterations, relation_size=store.size)


def _checked_bound(rep: LinearRep, result: EquivResult) -> EquivResult:
    # rank growth bounds every hkc run: at most dim insertions, hence at
    # most 1 + |alphabet| * dim extractions
    assert result.iterations <= 1 + len(rep.alphabet) * rep.dim
    assert result.relation_size <= rep.dim
    return result


def hkc_inf(rep: LinearRep, x: str, y: str, *, debug: bool = False,
            trace: list | None = None) -> EquivResult:
    """Decide equality of the full trace measures of two states.

    Always terminates.  ``trace`` (a list, appended in place) records every
    extraction; ``debug`` asserts the worklist loop invariant at each head.
    """
    store = _CongruenceStore(rep.dim)
    result = _decide(rep, x, y, store, check_total_mass=True,
                     trace=trace, debug=debug)
    return _checked_bound(rep, result)


def hkc_finite(rep: LinearRep, x: str, y: str, *, debug: bool = False,
               trace: list | None = None) -> EquivResult:
    """Decide equality on finite words only: the total-mass comparison is dropped."""
    store = _CongruenceStore(rep.dim)
    result = _decide(rep, x, y, store, check_total_mass=False,
                     trace=trace, debug=debug)
    return _checked_bound(rep, result)


def naive(rep: LinearRep, x: str, y: str, max_steps: int, *,
          trace: list | None = None) -> EquivResult:
    """The plain bisimulation search; may exhaust its budget on weighted systems."""
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    return _decide(rep, x, y, _PairStore(), check_total_mass=True,
                   max_steps=max_steps, trace=trace)


def hk(rep: LinearRep, x: str, y: str, max_steps: int, *,
       trace: list | None = None) -> EquivResult:
    """Bisimulation up to equivalence; still budget-bound on weighted systems."""
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    return _decide(rep, x, y, _EquivalenceStore(), check_total_mass=True,
                   max_steps=max_steps, trace=trace)
