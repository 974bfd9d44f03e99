"""Exact trace-measure evaluation on generator sets of words.

The measure induced by a configuration is evaluated on the generators of
the sigma-algebra over finite-and-infinite words -- the empty set, single
finite words, and cones (all words with a given finite prefix) -- plus the
derived sets of all finite words, all infinite words, and infinite-only
cones.  Finite-word mass is obtained in closed form as the least
nonnegative solution of a linear fixed-point system, so no query involves
limits or approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linear import Config, LinearRep, dot, out_term, out_total, word_transform
from .model import PtsFormatError, UnknownIdentifier, Word

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Empty:
    """The empty set of words."""


@dataclass(frozen=True)
class FiniteWord:
    """A single finite word."""

    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))


@dataclass(frozen=True)
class Cone:
    """All finite and infinite words with the given prefix."""

    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))


@dataclass(frozen=True)
class InfCone:
    """All infinite words with the given prefix."""

    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))


@dataclass(frozen=True)
class AllFinite:
    """The set of all finite words."""


@dataclass(frozen=True)
class AllInfinite:
    """The set of all infinite words."""


@dataclass(frozen=True)
class All:
    """The set of all finite and infinite words."""


GenSet = Empty | FiniteWord | Cone | InfCone | AllFinite | AllInfinite | All


class SingularRestrictedSystem(RuntimeError):
    """The restricted termination system was singular.

    Cannot happen for a valid system; raised only on an internal
    invariant breach.
    """


def _solve_exact(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over rationals for a square nonsingular system."""
    n = len(a)
    a = [row[:] for row in a]
    b = b[:]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col]), None)
        if pivot_row is None:
            raise SingularRestrictedSystem("restricted system has no unique solution")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            b[col], b[pivot_row] = b[pivot_row], b[col]
        inv = a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] / inv
            if not factor:
                continue
            for c in range(col, n):
                a[r][c] -= factor * a[col][c]
            b[r] -= factor * b[col]
    solution = [_ZERO] * n
    for r in range(n - 1, -1, -1):
        acc = b[r]
        for c in range(r + 1, n):
            acc -= a[r][c] * solution[c]
        solution[r] = acc / a[r][r]
    return solution


def finite_mass_vector(rep: LinearRep) -> Config:
    """Per-state probability of eventually stopping: the mass on finite words.

    Computed as the least nonnegative solution of the fixed-point system
    s = l_star + (sum_a M_a)^T s: states that cannot reach a positively
    terminating state get 0, and the system restricted to the remaining
    states is nonsingular and solved exactly.
    """
    n = rep.dim
    # combined one-step probability from source k to target j
    combined = [[_ZERO] * n for _ in range(n)]
    for matrix in rep.mats.values():
        for j in range(n):
            row = matrix[j]
            for k in range(n):
                if row[k]:
                    combined[j][k] += row[k]

    # states from which a positively terminating state is reachable
    live = {k for k in range(n) if rep.l_star[k]}
    stack = list(live)
    while stack:
        target = stack.pop()
        for source in range(n):
            if source not in live and combined[target][source]:
                live.add(source)
                stack.append(source)

    order = [k for k in range(n) if k in live]
    s = [_ZERO] * n
    if order:
        m = len(order)
        a = [[(_ONE if i == j else _ZERO) - combined[order[j]][order[i]]
              for j in range(m)] for i in range(m)]
        b = [rep.l_star[k] for k in order]
        solution = _solve_exact(a, b)
        for i, k in enumerate(order):
            s[k] = solution[i]

    result = tuple(s)
    # exact fixed point and probability range, as a guard on the solver
    for k in range(n):
        if not _ZERO <= result[k] <= _ONE:
            raise SingularRestrictedSystem(f"mass {result[k]} for state index {k}")
        expected = rep.l_star[k] + sum(
            (combined[j][k] * result[j] for j in range(n)), _ZERO)
        if result[k] != expected:
            raise SingularRestrictedSystem("fixed-point equation violated")
    return result


def measure(rep: LinearRep, u: Config, target: GenSet) -> Fraction:
    """Evaluate the trace measure of a configuration on a generator set.

    The formulas are linear in ``u``, so any configuration is accepted;
    the result is a probability only when ``u`` is a subdistribution.
    """
    if isinstance(target, Empty):
        return _ZERO
    if isinstance(target, FiniteWord):
        return out_term(rep, word_transform(rep, u, target.word))
    if isinstance(target, Cone):
        return out_total(rep, word_transform(rep, u, target.word))
    if isinstance(target, All):
        return out_total(rep, u)
    if isinstance(target, AllFinite):
        return dot(finite_mass_vector(rep), u)
    if isinstance(target, AllInfinite):
        return out_total(rep, u) - dot(finite_mass_vector(rep), u)
    if isinstance(target, InfCone):
        v = word_transform(rep, u, target.word)
        return out_total(rep, v) - dot(finite_mass_vector(rep), v)
    raise TypeError(f"not a generator-set query: {target!r}")


def tokenize_word(text: str, alphabet: tuple[str, ...]) -> Word:
    """Split a query word into declared letters.

    Dots separate letters explicitly ("0.2.1"); without dots the text is
    matched greedily against declared letters, longest first.  The empty
    string is the empty word.
    """
    if text == "":
        return ()
    if "." in text:
        letters = tuple(text.split("."))
        for letter in letters:
            if letter not in alphabet:
                raise UnknownIdentifier(f"undeclared letter {letter!r}")
        return letters
    by_length = sorted(alphabet, key=len, reverse=True)
    out = []
    position = 0
    while position < len(text):
        for letter in by_length:
            if text.startswith(letter, position):
                out.append(letter)
                position += len(letter)
                break
        else:
            raise UnknownIdentifier(
                f"cannot tokenize {text!r} at position {position} "
                f"against alphabet {list(alphabet)}")
    return tuple(out)


_PLAIN_QUERIES = {
    "empty": Empty,
    "finite": AllFinite,
    "infinite": AllInfinite,
    "all": All,
}

_WORD_QUERIES = {
    "word": FiniteWord,
    "cone": Cone,
    "infcone": InfCone,
}


def parse_query(text: str, alphabet: tuple[str, ...]) -> GenSet:
    """Parse the query syntax: empty | word:W | cone:W | infcone:W | finite | infinite | all."""
    if text in _PLAIN_QUERIES:
        return _PLAIN_QUERIES[text]()
    head, sep, rest = text.partition(":")
    if sep and head in _WORD_QUERIES:
        return _WORD_QUERIES[head](tokenize_word(rest, alphabet))
    raise PtsFormatError(f"unrecognized query {text!r}")
