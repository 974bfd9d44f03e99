"""Determinized linear view of a transition system.

Weighted state vectors (configurations) carry the dynamics as exact matrix
algebra: one n-by-n matrix per letter plus two output rows, the all-ones
total-mass row and the termination row.  Configurations are plain tuples of
Fractions; entries may be negative or exceed 1, since the equivalence
checker works with differences and scalings of distributions.

Matrix convention: ``mats[a][j][k]`` is the probability of moving from the
k-th state to the j-th state on letter ``a``.  Columns are source states,
so one step of a column vector u is the product ``M_a . u`` and the column
of ``M_a`` at a state equals the step image of that state's unit vector.
The transpose convention is equally common elsewhere; everything here
assumes columns-are-sources.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .model import Pts, UnknownIdentifier

Config = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LinearRep:
    """Linear representation of a system: outputs ``l_one``/``l_star`` and
    one transition matrix per letter, indexed in declared state order.

    ``l_one`` is always the all-ones row because every state's masses sum
    to 1; keeping it explicit makes the two output functionals symmetric.
    Immutable after construction; safe to share between threads.
    """

    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    l_one: Config
    l_star: Config
    mats: dict[str, Matrix]

    @property
    def dim(self) -> int:
        return len(self.states)

    def state_index(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise UnknownIdentifier(f"undeclared state {state!r}") from None

    def matrix(self, letter: str) -> Matrix:
        try:
            return self.mats[letter]
        except KeyError:
            raise UnknownIdentifier(f"undeclared letter {letter!r}") from None


def build_rep(pts: Pts) -> LinearRep:
    """Determinize a valid Pts into its linear representation."""
    mats = {
        letter: tuple(
            tuple(pts.move(source, letter, target) for source in pts.states)
            for target in pts.states)
        for letter in pts.alphabet
    }
    return LinearRep(
        states=pts.states,
        alphabet=pts.alphabet,
        l_one=tuple(_ONE for _ in pts.states),
        l_star=tuple(pts.stop(state) for state in pts.states),
        mats=mats,
    )


def dirac(rep: LinearRep, state: str) -> Config:
    """Unit basis vector of a state."""
    index = rep.state_index(state)
    return tuple(_ONE if j == index else _ZERO for j in range(rep.dim))


def step(rep: LinearRep, u: Config, letter: str) -> Config:
    """One transition: the exact matrix-vector product ``M_letter . u``."""
    matrix = rep.matrix(letter)
    if len(u) != rep.dim:
        raise ValueError(f"configuration has length {len(u)}, expected {rep.dim}")
    return tuple(
        sum((row[k] * u[k] for k in range(rep.dim) if u[k] and row[k]), _ZERO)
        for row in matrix)


def word_transform(rep: LinearRep, u: Config, word: Iterable[str]) -> Config:
    """Apply the letters of ``word`` left to right; the empty word is the identity."""
    v = tuple(u)
    for letter in word:
        v = step(rep, v, letter)
    return v


def dot(a: Config, b: Config) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b) if x and y), _ZERO)


def out_total(rep: LinearRep, u: Config) -> Fraction:
    """Total mass output: the cone measure of the full word space."""
    if len(u) != rep.dim:
        raise ValueError(f"configuration has length {len(u)}, expected {rep.dim}")
    return dot(rep.l_one, u)


def out_term(rep: LinearRep, u: Config) -> Fraction:
    """Termination output: the measure of the empty word."""
    if len(u) != rep.dim:
        raise ValueError(f"configuration has length {len(u)}, expected {rep.dim}")
    return dot(rep.l_star, u)
