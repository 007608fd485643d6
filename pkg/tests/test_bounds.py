import itertools
from fractions import Fraction
from math import factorial, floor, gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from nsgroebner.bounds import (
    PUBLISHED_TABLE_ROWS,
    PreconditionViolation,
    alpha_report,
    bound_report,
    bound_table,
    check_published_tables,
    count_p,
    count_q,
    gly_based_bound,
    gly_based_bound_exact,
    gly_weak_holds,
    gly_weak_sides,
    n_s_corollary_bound,
    prism_box_bound,
    prism_pyramid_high,
    prism_pyramid_low,
    shift_lemma_check,
    simple_corollary_bound,
)
from nsgroebner.semigroup import invariants, n_of_alpha, normalize


def brute_count(alphas, lo):
    alphas = [Fraction(a) for a in alphas]
    ranges = [range(lo, floor(a) + 1) for a in alphas]
    return sum(1 for xs in itertools.product(*ranges) if sum(x / a for x, a in zip(xs, alphas)) <= 1)


def literal_high(gens, alpha):
    # Formula transcribed term by term with exact rationals.
    a1, a2, k = gens[0], gens[1], len(gens)
    frac = Fraction(alpha, a1) - floor(Fraction(alpha, a1))
    prism = a1 ** (k - 1) * (floor(Fraction(alpha, a1) - a2) + 1)
    pyr = sum((floor(a1 * (lam + frac) / a2) + 1) ** (k - 1) for lam in range(a2))
    return prism + pyr


def literal_low(gens, alpha):
    a1, a2, k = gens[0], gens[1], len(gens)
    return sum(
        (floor(Fraction(alpha - lam * a1, a2)) + 1) ** (k - 1)
        for lam in range(floor(Fraction(alpha, a1)) + 1)
    )


def test_count_examples():
    assert count_q([1, 1]) == 3
    assert count_q([2, 2]) == 6
    assert count_p([2, 2]) == 1
    assert count_p([1, 1]) == 0
    assert count_p([3, 3]) == 3
    assert count_p([4, 4]) == 6
    assert count_q(["1/2"]) == 1


def test_count_rejects_nonpositive():
    with pytest.raises(PreconditionViolation):
        count_q([1, 0])


fracs = st.builds(Fraction, st.integers(1, 60), st.integers(1, 6)).filter(lambda a: a <= 10)


@settings(max_examples=120, deadline=None)
@given(st.lists(fracs, min_size=1, max_size=3))
def test_counts_match_enumeration(alphas):
    assert count_q(alphas) == brute_count(alphas, 0)
    assert count_p(alphas) == brute_count(alphas, 1)


def test_shift_lemma_examples():
    assert shift_lemma_check([1, 1])
    assert shift_lemma_check([2, 2])
    for a in ["1/3", 1, "5/2", 7]:
        assert shift_lemma_check([a])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.builds(Fraction, st.integers(1, 400), st.integers(1, 20)).filter(lambda a: a <= 20), min_size=1, max_size=4))
def test_shift_lemma_property(alphas):
    assert shift_lemma_check(alphas)


def test_gly_weak_examples():
    assert count_p([6, 6, 6]) == 20
    assert gly_weak_sides([6, 6, 6]) == (120, 125)
    assert gly_weak_holds([6, 6, 6])
    assert gly_weak_sides([5, 3, 2]) == (0, 8)
    lhs, rhs = gly_weak_sides([3, 2, 1])
    assert lhs == rhs == 0


def test_gly_weak_preconditions():
    with pytest.raises(PreconditionViolation):
        gly_weak_holds([5, 4])
    with pytest.raises(PreconditionViolation):
        gly_weak_holds([5, 4, "1/2"])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.builds(Fraction, st.integers(1, 300), st.integers(1, 20)), min_size=3, max_size=5))
def test_gly_weak_property(alphas):
    alphas = [max(a, Fraction(1)) for a in alphas]
    lhs, rhs = gly_weak_sides(alphas)
    assert lhs <= rhs
    assert (lhs == rhs) == (min(alphas) == 1)


def test_gly_based_bound_examples():
    assert gly_based_bound((5, 6, 11)) == 19
    assert gly_based_bound((6, 9, 20)) == 44
    assert gly_based_bound((5, 7)) == 12
    assert gly_based_bound_exact((5, 7)) == 12
    with pytest.raises(PreconditionViolation):
        gly_based_bound((1,))


def test_gly_bound_is_exact_rational():
    f = invariants((6, 9, 20)).frobenius
    exact = Fraction((f + 29) * (f + 26) * (f + 15), 6 * 6 * 9 * 20)
    assert gly_based_bound_exact((6, 9, 20)) == exact
    assert floor(exact) == 44


def test_prism_pyramid_high():
    assert prism_pyramid_high((5, 7), 35) == 24 == n_of_alpha((5, 7), 35)
    assert prism_pyramid_high((5, 7), 36) == literal_high((5, 7), 36) == 25
    assert n_of_alpha((5, 7), 36) == 25
    assert prism_pyramid_high((2, 3), 6) == 6 == n_of_alpha((2, 3), 6)
    with pytest.raises(PreconditionViolation):
        prism_pyramid_high((5, 7), 34)


def test_prism_pyramid_low():
    assert prism_pyramid_low((5, 7), 20) == 10 == n_of_alpha((5, 7), 20)
    assert prism_pyramid_low((5, 7), 0) == 1
    assert prism_pyramid_low((5, 7), 35) == 25
    with pytest.raises(PreconditionViolation):
        prism_pyramid_low((5, 7), 36)


def test_simple_corollary():
    assert simple_corollary_bound((5, 7), 35) == 35
    assert simple_corollary_bound((2, 3), 6) == 6
    assert simple_corollary_bound((7, 9, 11), 63) == 441


def test_simple_corollary_counterexample():
    # The printed corollary undercounts by one pyramid level here.
    assert n_of_alpha((2, 3), 7) == 7
    assert simple_corollary_bound((2, 3), 7) == 6
    assert prism_pyramid_high((2, 3), 7) == 7
    assert prism_box_bound((2, 3), 7) == 8


def test_n_s_corollary():
    assert n_s_corollary_bound((5, 7)) == 13
    assert n_s_corollary_bound((2, 3)) == 2
    with pytest.raises(PreconditionViolation):
        n_s_corollary_bound((11, 22, 28))


@pytest.mark.parametrize(
    "gens", [(5, 7), (2, 3), (7, 9, 11), (5, 6, 19), (6, 9, 20), (7, 11, 34, 37), (3, 5, 7, 11, 13)]
)
def test_n_s_corollary_identity(gens):
    S = normalize(gens)
    f = invariants(S).frobenius
    assert n_s_corollary_bound(S) == prism_pyramid_low(S, S[0] * S[1]) + f - S[0] * S[1]
    assert n_s_corollary_bound(S) >= invariants(S).sporadic_count_with_zero


coprime = st.lists(st.integers(2, 30), min_size=2, max_size=4).filter(
    lambda g: gcd(*g) == 1 and len(set(g)) >= 2
)


@settings(max_examples=150, deadline=None)
@given(coprime, st.integers(0, 10**6))
def test_formulas_match_literal_transcription(gens, seed):
    S = normalize(gens)
    a1, a2 = S[0], S[1]
    lo_alpha = seed % (a1 * a2 + 1)
    hi_alpha = a1 * a2 + seed % (2 * a1 * a2 + 1)
    assert prism_pyramid_low(S, lo_alpha) == literal_low(S.generators, lo_alpha)
    assert prism_pyramid_high(S, hi_alpha) == literal_high(S.generators, hi_alpha)
    assert prism_pyramid_low(S, lo_alpha) >= n_of_alpha(S, lo_alpha)
    assert prism_pyramid_high(S, hi_alpha) >= n_of_alpha(S, hi_alpha)
    assert prism_box_bound(S, hi_alpha) >= prism_pyramid_high(S, hi_alpha)


def test_bound_report_rows():
    rep = bound_report((5, 6, 19))
    assert (rep.frobenius, rep.n_true_without_zero, rep.gly_bound) == (14, 5, 10)
    assert rep.ratio == 2
    rep = bound_report((7, 11, 34, 37))
    assert (rep.frobenius, rep.gly_bound) == (38, 50)
    rep = bound_report((10, 19, 31, 37, 54, 65))
    assert (rep.frobenius, rep.gly_bound) == (63, 366)
    assert rep.n_true_without_zero == 24


def test_bound_report_soundness():
    for rep in bound_table([(5, 7), (7, 9, 11), (6, 9, 20), (5, 6, 11), (1, 4)]):
        n = rep.n_true_with_zero
        assert rep.gly_bound >= n
        if rep.prism_pyramid_bound is not None:
            assert rep.prism_pyramid_bound >= n
        if rep.simple_corollary_bound is not None:
            assert rep.simple_corollary_bound >= n


def test_alpha_report():
    rep = alpha_report((5, 7), 35)
    assert (rep.regime, rep.n_true, rep.prism_pyramid, rep.simple_corollary) == ("high", 24, 24, 35)
    rep = alpha_report((5, 7), 20)
    assert (rep.regime, rep.prism_pyramid, rep.simple_corollary) == ("low", 10, None)


def test_published_tables():
    assert len(PUBLISHED_TABLE_ROWS) == 32
    checks = check_published_tables()
    status = {c.printed.generators: c.status for c in checks}
    assert status[(7, 11, 23, 17)] == "erratum-f"
    assert status[(5, 6, 11)] == "erratum-n"
    assert "mismatch" not in status.values()
    assert sum(c.bound_ok for c in checks) == 31
    dups = [c for c in checks if c.duplicate_of is not None]
    assert [c.printed.generators for c in dups] == [(13, 15, 31, 63)]
