"""Numerical semigroups and a dynamic-programming oracle for their invariants.

Everything here is computed from a plain reachability table, with no
algebra involved, so the Groebner-basis code can be checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, List, Tuple


class SemigroupError(ValueError):
    """Base class for invalid generator lists."""


class EmptyInput(SemigroupError):
    def __init__(self):
        super().__init__("empty generator list")


class NonPositiveGenerator(SemigroupError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"generators must be positive integers, got {value}")


class GcdNotOne(SemigroupError):
    def __init__(self, d: int):
        self.gcd = d
        super().__init__(f"generators must be coprime, gcd = {d}")


@dataclass(frozen=True)
class SemigroupSpec:
    """The semigroup generated by an ascending, duplicate-free, coprime tuple."""

    generators: Tuple[int, ...]

    def __post_init__(self):
        gens = self.generators
        if not gens:
            raise EmptyInput()
        if any(b <= a for a, b in zip(gens, gens[1:])):
            raise ValueError("generators must be strictly ascending; use normalize()")
        if gens[0] < 1:
            raise NonPositiveGenerator(gens[0])
        d = reduce(gcd, gens)
        if d != 1:
            raise GcdNotOne(d)

    @property
    def k(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"


def normalize(raw: Iterable[int]) -> SemigroupSpec:
    """Sort and deduplicate ``raw`` and validate it as a generating set.

    >>> normalize([7, 11, 23, 17])
    SemigroupSpec(generators=(7, 11, 17, 23))
    """
    values = list(raw)
    if not values:
        raise EmptyInput()
    for v in values:
        if isinstance(v, bool) or int(v) != v or v < 1:
            raise NonPositiveGenerator(v)
    gens = tuple(sorted({int(v) for v in values}))
    d = reduce(gcd, gens)
    if d != 1:
        raise GcdNotOne(d)
    return SemigroupSpec(gens)


def _as_spec(S) -> SemigroupSpec:
    return S if isinstance(S, SemigroupSpec) else normalize(S)


def table_length(S: SemigroupSpec) -> int:
    """Length of a reachability table guaranteed to contain the conductor.

    Schur's bound f <= a1*ak - a1 - ak holds for any coprime set; a1*a2 alone
    is not enough when gcd(a1, a2) > 1 (e.g. <11, 22, 28>).
    """
    gens = S.generators
    if gens[0] == 1:
        return 1
    return gens[0] * gens[-1] + gens[-1]


def reachability(S: SemigroupSpec, upto: int) -> List[bool]:
    """``r[n]`` is True iff ``n`` is a nonnegative combination of generators."""
    r = [False] * (upto + 1)
    r[0] = True
    gens = S.generators
    for n in range(1, upto + 1):
        for a in gens:
            if a > n:
                break
            if r[n - a]:
                r[n] = True
                break
    return r


@lru_cache(maxsize=256)
def _conductor(S: SemigroupSpec) -> int:
    # Stop once a1 consecutive members are seen: adding a1 repeatedly covers the rest.
    a1 = S.generators[0]
    limit = table_length(S)
    r = reachability(S, limit)
    run = 0
    for n, member in enumerate(r):
        run = run + 1 if member else 0
        if run == a1:
            return n - a1 + 1
    raise AssertionError(f"no conductor found below {limit} for {S}")


def conductor(S) -> int:
    return _conductor(_as_spec(S))


def frobenius(S) -> int:
    """Largest gap; -1 when the semigroup is all of the nonnegative integers."""
    return conductor(S) - 1


def is_member(S, N: int) -> bool:
    if N < 0:
        raise ValueError("N must be nonnegative")
    S = _as_spec(S)
    c = conductor(S)
    if N >= c:
        return True
    return reachability(S, N)[N]


def minimal_generators(S) -> SemigroupSpec:
    """Drop every generator that is a combination of the smaller ones."""
    S = _as_spec(S)
    kept: List[int] = []
    for a in S.generators:
        r = [False] * (a + 1)
        r[0] = True
        for n in range(1, a + 1):
            r[n] = any(b <= n and r[n - b] for b in kept)
        if not r[a]:
            kept.append(a)
    return SemigroupSpec(tuple(kept))


@dataclass(frozen=True)
class InvariantReport:
    frobenius: int
    genus: int
    conductor: int
    multiplicity: int
    embedding_dimension: int
    gaps: Tuple[int, ...]
    sporadic: Tuple[int, ...]

    @property
    def sporadic_count_with_zero(self) -> int:
        return len(self.sporadic)

    @property
    def sporadic_count_without_zero(self) -> int:
        return len(self.sporadic) - 1 if self.sporadic else 0


def invariants(S) -> InvariantReport:
    S = _as_spec(S)
    c = conductor(S)
    r = reachability(S, max(c - 1, 0))
    gaps = tuple(n for n in range(c) if not r[n])
    sporadic = tuple(n for n in range(c) if r[n])
    return InvariantReport(
        frobenius=c - 1,
        genus=len(gaps),
        conductor=c,
        multiplicity=S.generators[0],
        embedding_dimension=len(minimal_generators(S)),
        gaps=gaps,
        sporadic=sporadic,
    )


def gaps(S) -> Tuple[int, ...]:
    return invariants(S).gaps


def n_of_alpha(S, alpha: int) -> int:
    """Number of semigroup elements in ``[0, alpha]``, zero included."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    S = _as_spec(S)
    c = conductor(S)
    if alpha < c:
        return sum(reachability(S, alpha))
    return sum(reachability(S, c - 1)) + (alpha - c + 1) if c > 0 else alpha + 1


def denumerant(S, N: int) -> int:
    """Number of tuples ``y >= 0`` with ``sum(y_i * a_i) == N``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    gens = _as_spec(S).generators

    @lru_cache(maxsize=None)
    def count(n: int, i: int) -> int:
        a = gens[i]
        if i == len(gens) - 1:
            return 1 if n % a == 0 else 0
        return sum(count(n - y * a, i + 1) for y in range(n // a + 1))

    return count(N, 0)


@dataclass(frozen=True)
class WilfCheck:
    conductor: int
    e: int
    n_with_zero: int
    holds: bool


def wilf_check(S) -> WilfCheck:
    inv = invariants(S)
    e = inv.embedding_dimension
    n = inv.sporadic_count_with_zero
    return WilfCheck(inv.conductor, e, n, inv.conductor <= e * n)
