"""Randomized consistency sweeps between the Groebner path and the DP oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Callable, List, Optional

from . import bounds, groebner, semigroup, staircase


@dataclass
class PropertyResult:
    name: str
    passed: bool
    detail: str = ""


def random_spec(rng: random.Random, k_max: int = 5, a_max: int = 50, k_min: int = 1):
    while True:
        k = rng.randint(k_min, k_max)
        gens = [rng.randint(1, a_max) for _ in range(k)]
        if reduce(gcd, gens) == 1:
            S = semigroup.normalize(gens)
            if S.k >= k_min:
                return S


def _oracle_equivalence(rng, cases):
    for _ in range(cases):
        S = random_spec(rng)
        B = groebner.buchberger(S)
        model = staircase.build_staircase(B)
        inv = semigroup.invariants(S)
        got = staircase.gaps_via_staircase(model)
        if list(inv.gaps) != got:
            return f"{S}: staircase gaps {got} != oracle {list(inv.gaps)}"
        top = 3 * inv.conductor
        member = semigroup.reachability(S, top)
        for n, nf in enumerate(groebner.normal_forms_upto(B, top)):
            if nf[0] + sum(s * a for s, a in zip(nf[1:], S)) != n:
                return f"{S}: certificate {nf} does not decompose {n}"
            if (nf[0] == 0) != member[n]:
                return f"{S}: membership of {n} disagrees"
    return None


def _bound_soundness(rng, cases):
    for _ in range(cases):
        S = random_spec(rng, a_max=60, k_min=2)
        a1, a2 = S[0], S[1]
        for _ in range(5):
            alpha = rng.randint(0, 3 * a1 * a2)
            n = semigroup.n_of_alpha(S, alpha)
            b = bounds.prism_pyramid(S, alpha)
            if b < n:
                return f"{S}, alpha={alpha}: bound {b} < n(S, alpha) = {n}"
            if alpha >= a1 * a2 and b > bounds.prism_box_bound(S, alpha):
                return f"{S}, alpha={alpha}: prism/pyramid exceeds the prism box bound"
        if S.k >= 3:
            n = semigroup.invariants(S).sporadic_count_with_zero
            if bounds.gly_based_bound(S) < n:
                return f"{S}: GLY-based bound below n(S) = {n}"
    return None


def _closed_forms(rng, cases):
    for _ in range(cases):
        a1 = rng.randint(2, 60)
        a2 = rng.randint(2, 60)
        if a1 == a2 or gcd(a1, a2) != 1:
            continue
        S = semigroup.normalize([a1, a2])
        inv = semigroup.invariants(S)
        if inv.frobenius != a1 * a2 - a1 - a2:
            return f"{S}: f = {inv.frobenius}"
        if 2 * inv.genus != (a1 - 1) * (a2 - 1):
            return f"{S}: genus = {inv.genus}"
        if bounds.gly_based_bound_exact(S) != inv.sporadic_count_with_zero:
            return f"{S}: k=2 GLY-based bound is not n(S)"
    return None


def _random_alphas(rng, n, descending_ge_one=False):
    out = [Fraction(rng.randint(1, 20 * d), d) for d in (rng.randint(1, 20) for _ in range(n))]
    if descending_ge_one:
        out = sorted((max(a, Fraction(1)) for a in out), reverse=True)
    return out


def _lattice_lemmas(rng, cases):
    for _ in range(cases):
        alphas = _random_alphas(rng, rng.randint(1, 4))
        if not bounds.shift_lemma_check(alphas):
            return f"shift lemma fails for {alphas}"
        alphas = _random_alphas(rng, rng.randint(3, 5), descending_ge_one=True)
        if rng.random() < 0.25:
            alphas[-1] = Fraction(1)
        lhs, rhs = bounds.gly_weak_sides(alphas)
        if lhs > rhs:
            return f"weak GLY estimate fails for {alphas}"
    return None


PROPERTIES: List[tuple] = [
    ("oracle-equivalence", _oracle_equivalence),
    ("bound-soundness", _bound_soundness),
    ("closed-forms", _closed_forms),
    ("lattice-lemmas", _lattice_lemmas),
]


def run(seed: int = 0, cases: int = 40, progress: Optional[Callable[[PropertyResult], None]] = None):
    """Run every property; stops at the first failure. Returns the results so far."""
    results = []
    for name, check in PROPERTIES:
        rng = random.Random(f"{seed}:{name}")
        detail = check(rng, cases)
        res = PropertyResult(name, detail is None, detail or "")
        results.append(res)
        if progress:
            progress(res)
        if not res.passed:
            break
    return results
