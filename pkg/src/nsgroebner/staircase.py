"""Standard monomials of the reduced basis and what they encode.

The lead exponents ("corners") of the reduced basis span the staircase
``union(q + Z>=0^(k+1))``.  Points outside it are standard monomials.  A
standard point ``(s0, s1, ..., sk)`` has weight ``s0 + sum(s_i a_i)``; those
with ``s0 >= 1`` are in bijection with the gaps, those with ``s0 == 0`` with
the elements of the semigroup.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .groebner import GroebnerBasis, ResourceLimit, normal_form_of_power
from .monomials import LEX, ExponentVector, LengthMismatch, MonomialOrder, weight
from .semigroup import SemigroupSpec


@dataclass(frozen=True)
class StaircaseModel:
    corners: Tuple[ExponentVector, ...]
    spec: SemigroupSpec
    order: MonomialOrder = LEX

    @property
    def n_vars(self) -> int:
        return self.spec.k + 1

    def is_standard(self, p: ExponentVector) -> bool:
        return is_standard(self, p)


@dataclass(frozen=True)
class CertifiedMembership:
    n: int
    member: bool
    certificate: ExponentVector

    def decomposition(self, generators) -> str:
        """``"13 = 1 + 1*5 + 1*7"``; terms with zero coefficient are omitted."""
        terms = []
        if self.certificate[0]:
            terms.append(str(self.certificate[0]))
        for s, a in zip(self.certificate[1:], generators):
            if s:
                terms.append(f"{s}*{a}" if s > 1 else str(a))
        return f"{self.n} = " + (" + ".join(terms) if terms else "0")


def build_staircase(basis: GroebnerBasis) -> StaircaseModel:
    """Corners are the lead exponents, listed in ascending lex order."""
    return StaircaseModel(tuple(sorted(basis.leads)), basis.spec, basis.order)


def _standard(corners, p) -> bool:
    for q in corners:
        for a, b in zip(q, p):
            if a > b:
                break
        else:
            return False
    return True


def is_standard(model: StaircaseModel, p: ExponentVector) -> bool:
    if len(p) != model.n_vars:
        raise LengthMismatch(f"point of length {len(p)} in a model with {model.n_vars} variables")
    return _standard(model.corners, p)


def containing_corners(model: StaircaseModel, p: ExponentVector) -> List[ExponentVector]:
    """Corners ``q`` with ``p`` in ``q + Z>=0^(k+1)``."""
    return [q for q in model.corners if all(a <= b for a, b in zip(q, p))]


def _bfs(model: StaircaseModel, seeds: Iterable[ExponentVector], accept, cap: int) -> List[ExponentVector]:
    # The standard set is downward closed, so unit steps from the seeds reach all of it.
    n = model.n_vars
    seen = set()
    queue = deque()
    for s in seeds:
        if s not in seen and accept(s) and _standard(model.corners, s):
            seen.add(s)
            queue.append(s)
    while queue:
        p = queue.popleft()
        for i in range(n):
            q = p[:i] + (p[i] + 1,) + p[i + 1 :]
            if q in seen or not accept(q) or not _standard(model.corners, q):
                continue
            seen.add(q)
            if len(seen) > cap:
                raise ResourceLimit(f"staircase enumeration exceeded {cap} points")
            queue.append(q)
    return list(seen)


def _gap_cap(spec: SemigroupSpec) -> int:
    # Schur: genus <= f(S) + 1 <= a1*ak.
    return spec.generators[0] * spec.generators[-1] + 1


def gap_points(model: StaircaseModel) -> List[ExponentVector]:
    """Standard points off the wall ``x = 0``, ordered by the gap they encode."""
    gens = model.spec.generators
    a1 = gens[0]
    n = model.n_vars
    seeds = [(s0,) + (0,) * (n - 1) for s0 in range(1, a1)]
    pts = _bfs(model, seeds, lambda p: p[0] >= 1, _gap_cap(model.spec))
    pts.sort(key=lambda p: weight(p, gens))
    return pts


def gaps_via_staircase(model: StaircaseModel) -> List[int]:
    gens = model.spec.generators
    return [weight(p, gens) for p in gap_points(model)]


def gap_points_by_level(model: StaircaseModel) -> Dict[int, List[ExponentVector]]:
    """Gap points grouped by their x-exponent, sorted lex inside each level."""
    levels: Dict[int, List[ExponentVector]] = {}
    for p in gap_points(model):
        levels.setdefault(p[0], []).append(p)
    return {lvl: sorted(pts) for lvl, pts in sorted(levels.items())}


def corner_slice(model: StaircaseModel, level: int) -> List[ExponentVector]:
    """Corners lying in the hyperplane ``x = level``, with the x coordinate dropped."""
    return [q[1:] for q in model.corners if q[0] == level]


def ceiling_level(model: StaircaseModel) -> int:
    """Smallest x-exponent of a pure x-power corner; no standard point reaches it."""
    return min(q[0] for q in model.corners if not any(q[1:]))


def element_points(model: StaircaseModel, alpha: int) -> List[ExponentVector]:
    """Standard points on ``x = 0`` with weight at most ``alpha``, ordered by weight."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    gens = model.spec.generators
    origin = (0,) * model.n_vars
    pts = _bfs(
        model,
        [origin],
        lambda p: p[0] == 0 and weight(p, gens) <= alpha,
        alpha + 1,
    )
    pts.sort(key=lambda p: weight(p, gens))
    return pts


def elements_via_staircase(model: StaircaseModel, alpha: int) -> List[int]:
    gens = model.spec.generators
    return [weight(p, gens) for p in element_points(model, alpha)]


def certify(basis: GroebnerBasis, N: int) -> CertifiedMembership:
    """Membership of ``N`` read off the normal form of ``x^N``."""
    nf = normal_form_of_power(basis, N)
    if weight(nf, basis.spec.generators) != N:
        raise AssertionError(f"certificate {nf} does not decompose {N}")
    return CertifiedMembership(N, nf[0] == 0, nf)
