"""Buchberger's algorithm for the binomial ideal ``<y_i - x^a_i>``.

Every polynomial that appears is a pure-difference binomial ``lead - tail``,
so a binomial is stored as two exponent vectors and reduction of a monomial
always yields a monomial.  S-pairs, reduction and the Gebauer-Moeller pair
criteria all act on exponent vectors only.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple

from .monomials import LEX, ExponentVector, MonomialOrder, unit, weight
from .semigroup import SemigroupSpec, _as_spec

DEFAULT_MAX_PAIRS = 10**6
DEFAULT_MAX_BASIS = 10**5


class ResourceLimit(RuntimeError):
    """Raised when a configured cap on pairs, basis size or reduction steps trips."""


class Binomial(NamedTuple):
    lead: ExponentVector
    tail: ExponentVector

    @classmethod
    def oriented(cls, u: ExponentVector, v: ExponentVector) -> Optional["Binomial"]:
        """The binomial ``u - v`` with its larger monomial first, or None if ``u == v``."""
        if u == v:
            return None
        return cls(u, v) if u > v else cls(v, u)

    def __str__(self):
        from .monomials import format_monomial

        return f"{format_monomial(self.lead)} - {format_monomial(self.tail)}"


def _divides(u, v):
    for a, b in zip(u, v):
        if a > b:
            return False
    return True


def _lcm(u, v):
    return tuple(a if a > b else b for a, b in zip(u, v))


def _coprime(u, v):
    for a, b in zip(u, v):
        if a and b:
            return False
    return True


def ideal_generators(spec) -> List[Binomial]:
    """``y_i - x^a_i`` for each generator; the x-power leads under lex."""
    spec = _as_spec(spec)
    n = spec.k + 1
    return [Binomial.oriented(unit(n, 0, a), unit(n, i + 1)) for i, a in enumerate(spec)]


def s_pair(f: Binomial, g: Binomial) -> Optional[Binomial]:
    """S-polynomial of two binomials; None when it vanishes identically."""
    L = _lcm(f.lead, g.lead)
    u = tuple(l - a + b for l, a, b in zip(L, f.lead, f.tail))
    v = tuple(l - a + b for l, a, b in zip(L, g.lead, g.tail))
    return Binomial.oriented(u, v)


def _reduce(elements: Sequence[Binomial], m: ExponentVector, fuel: Optional[int] = None):
    # First listed element whose lead divides m is applied as many times as it
    # divides; each application is an ordinary one-step reduction.
    steps = 0
    while True:
        for lead, tail in elements:
            t = None
            for a, b in zip(lead, m):
                if a:
                    q = b // a
                    if q == 0:
                        t = 0
                        break
                    if t is None or q < t:
                        t = q
            if t:
                m = tuple(c + t * (b - a) for c, a, b in zip(m, lead, tail))
                steps += t
                if fuel is not None and steps > fuel:
                    raise ResourceLimit(f"reduction exceeded {fuel} steps")
                break
        else:
            return m


def reduce_monomial(basis, m: ExponentVector, fuel: Optional[int] = None) -> ExponentVector:
    """Normal form of the monomial ``m`` modulo ``basis`` (a GroebnerBasis or binomial list).

    Reducers are tried in list order; a GroebnerBasis keeps its elements
    sorted by descending lead, so the largest applicable lead wins.
    """
    elements = basis.elements if isinstance(basis, GroebnerBasis) else list(basis)
    m = tuple(m)
    for b in elements:
        if len(b.lead) != len(m):
            from .monomials import LengthMismatch

            raise LengthMismatch(f"monomial of length {len(m)} against basis of length {len(b.lead)}")
    return _reduce(elements, m, fuel)


@dataclass(frozen=True)
class GroebnerBasis:
    spec: SemigroupSpec
    elements: Tuple[Binomial, ...]
    order: MonomialOrder = LEX
    pairs_processed: int = field(default=0, compare=False)

    @property
    def leads(self) -> List[ExponentVector]:
        return [b.lead for b in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def reduce(self, m: ExponentVector) -> ExponentVector:
        return _reduce(self.elements, tuple(m))

    def normal_form_of_power(self, N: int) -> ExponentVector:
        return normal_form_of_power(self, N)


def _pair_key(L, gens):
    return (weight(L, gens), L)


def buchberger(
    spec,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_basis: int = DEFAULT_MAX_BASIS,
) -> GroebnerBasis:
    """Reduced lex Groebner basis of ``<y_i - x^a_i>``.

    Pairs are processed smallest lcm first (compared by weighted degree,
    then lex) and pruned with the Gebauer-Moeller criteria, which include
    Buchberger's coprime-lead criterion.
    """
    spec = _as_spec(spec)
    gens = spec.generators
    polys: List[Binomial] = []
    active: List[int] = []
    live: Set[Tuple[int, int]] = set()
    heap: List = []
    processed = 0

    def current():
        return [polys[i] for i in active]

    def full_reduce(b: Binomial) -> Optional[Binomial]:
        elems = current()
        return Binomial.oriented(_reduce(elems, b.lead), _reduce(elems, b.tail))

    def update(h: int):
        lh = polys[h].lead
        cands = [(g, _lcm(lh, polys[g].lead)) for g in active]
        kept: List[Tuple[int, ExponentVector]] = []
        for idx, (g, L) in enumerate(cands):
            if _coprime(lh, polys[g].lead):
                kept.append((g, L))
                continue
            rest = cands[idx + 1 :]
            if any(_divides(L2, L) for _, L2 in rest) or any(_divides(L2, L) for _, L2 in kept):
                continue
            kept.append((g, L))
        new_pairs = [(g, L) for g, L in kept if not _coprime(lh, polys[g].lead)]

        for pair in list(live):
            i, j = pair
            Lij = _lcm(polys[i].lead, polys[j].lead)
            if (
                _divides(lh, Lij)
                and _lcm(polys[i].lead, lh) != Lij
                and _lcm(lh, polys[j].lead) != Lij
            ):
                live.discard(pair)
        for g, L in new_pairs:
            pair = (g, h)
            live.add(pair)
            heapq.heappush(heap, (_pair_key(L, gens), pair))

        active[:] = [g for g in active if not _divides(lh, polys[g].lead)]
        active.append(h)
        if len(active) > max_basis:
            raise ResourceLimit(f"basis size exceeded {max_basis}")

    for g in sorted(ideal_generators(spec), key=lambda b: b.lead):
        h = full_reduce(g)
        if h is not None:
            polys.append(h)
            update(len(polys) - 1)

    while heap:
        _, pair = heapq.heappop(heap)
        if pair not in live:
            continue
        live.discard(pair)
        processed += 1
        if processed > max_pairs:
            raise ResourceLimit(f"pair count exceeded {max_pairs}")
        s = s_pair(polys[pair[0]], polys[pair[1]])
        if s is None:
            continue
        h = full_reduce(s)
        if h is not None:
            polys.append(h)
            update(len(polys) - 1)

    return GroebnerBasis(spec, interreduce(current()), LEX, processed)


def interreduce(elements: Sequence[Binomial]) -> Tuple[Binomial, ...]:
    """Drop redundant leads, bring every tail to normal form, sort leads descending."""
    minimal = [
        b
        for i, b in enumerate(elements)
        if not any(
            _divides(c.lead, b.lead) and (c.lead != b.lead or j < i)
            for j, c in enumerate(elements)
            if j != i
        )
    ]
    minimal.sort(key=lambda b: b.lead, reverse=True)
    out = []
    for b in minimal:
        tail = _reduce(minimal, b.tail)
        assert tail < b.lead
        out.append(Binomial(b.lead, tail))
    return tuple(out)


def normal_form_of_power(basis: GroebnerBasis, N: int) -> ExponentVector:
    """Normal form of ``x^N``; its weight is N and its x-exponent is 0 iff N is in S."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    n_vars = basis.spec.k + 1
    nf = _reduce(basis.elements, unit(n_vars, 0, N))
    assert weight(nf, basis.spec.generators) == N
    return nf


def normal_forms_upto(basis: GroebnerBasis, N_max: int) -> List[ExponentVector]:
    """Normal forms of ``x^0, ..., x^N_max`` using NF(x^(n+1)) = NF(x * NF(x^n))."""
    n_vars = basis.spec.k + 1
    out = []
    nf = (0,) * n_vars
    for n in range(N_max + 1):
        if n:
            nf = _reduce(basis.elements, (nf[0] + 1,) + nf[1:])
        out.append(nf)
    return out


def is_groebner(elements: Sequence[Binomial]) -> bool:
    """Buchberger's criterion: every S-pair reduces to zero."""
    elements = list(elements)
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            s = s_pair(elements[i], elements[j])
            if s is None:
                continue
            if _reduce(elements, s.lead) != _reduce(elements, s.tail):
                return False
    return True


def is_reduced(elements: Sequence[Binomial]) -> bool:
    for i, b in enumerate(elements):
        for j, c in enumerate(elements):
            if i != j and (_divides(c.lead, b.lead) or _divides(c.lead, b.tail)):
                return False
        if _divides(b.lead, b.tail):
            return False
    return True
