import random

import pytest

from nsgroebner.groebner import (
    Binomial,
    ResourceLimit,
    buchberger,
    ideal_generators,
    interreduce,
    is_groebner,
    is_reduced,
    normal_form_of_power,
    normal_forms_upto,
    reduce_monomial,
    s_pair,
)
from nsgroebner.monomials import LengthMismatch, weight
from nsgroebner.semigroup import invariants, is_member, normalize
from nsgroebner.selftest import random_spec

CORNERS_57 = [(0, 7, 0), (1, 0, 2), (1, 4, 0), (2, 1, 0), (3, 0, 1), (5, 0, 0)]
CORNERS_7911 = [
    (0, 0, 11, 0), (0, 1, 0, 1), (0, 1, 9, 0), (0, 2, 7, 0), (0, 3, 5, 0),
    (0, 4, 3, 0), (0, 5, 1, 0), (0, 6, 0, 0), (1, 0, 0, 2), (1, 0, 1, 1),
    (1, 0, 3, 0), (1, 2, 2, 0), (1, 3, 0, 0), (2, 0, 1, 0), (2, 1, 0, 0),
    (3, 0, 0, 1), (7, 0, 0, 0),
]


def test_ideal_generators():
    assert ideal_generators((5, 7)) == [
        Binomial((5, 0, 0), (0, 1, 0)),
        Binomial((7, 0, 0), (0, 0, 1)),
    ]
    assert ideal_generators((1,)) == [Binomial((1, 0), (0, 1))]
    assert [b.lead for b in ideal_generators((7, 9, 11))] == [
        (7, 0, 0, 0), (9, 0, 0, 0), (11, 0, 0, 0),
    ]


def test_s_pair():
    f = Binomial((5, 0, 0), (0, 1, 0))
    g = Binomial((7, 0, 0), (0, 0, 1))
    assert s_pair(f, g) == Binomial((2, 1, 0), (0, 0, 1))
    assert s_pair(f, f) is None


def test_s_pair_coprime_reduces_to_zero(basis57):
    f = Binomial((0, 7, 0), (0, 0, 5))
    g = Binomial((1, 0, 2), (0, 3, 0))
    s = s_pair(f, g)
    assert reduce_monomial(basis57, s.lead) == reduce_monomial(basis57, s.tail)


def test_golden_bases(basis57, basis7911):
    assert sorted(basis57.leads) == CORNERS_57
    assert sorted(basis7911.leads) == CORNERS_7911
    B = buchberger((1,))
    assert B.elements == (Binomial((1, 0), (0, 1)),)


def test_golden_tails_7911(basis7911):
    # Tails as printed, oriented so the printed corner is the lead.
    printed = {
        (0, 0, 11, 0): (0, 0, 0, 9),
        (0, 1, 0, 1): (0, 0, 2, 0),
        (0, 1, 9, 0): (0, 0, 0, 8),
        (0, 2, 7, 0): (0, 0, 0, 7),
        (0, 3, 5, 0): (0, 0, 0, 6),
        (0, 4, 3, 0): (0, 0, 0, 5),
        (0, 5, 1, 0): (0, 0, 0, 4),
        (0, 6, 0, 0): (0, 0, 1, 3),
        (1, 0, 0, 2): (0, 2, 1, 0),
        (1, 0, 1, 1): (0, 3, 0, 0),
        (1, 0, 3, 0): (0, 4, 0, 0),
        (1, 2, 2, 0): (0, 0, 0, 3),
        (1, 3, 0, 0): (0, 0, 0, 2),
        (2, 0, 1, 0): (0, 0, 0, 1),
        (2, 1, 0, 0): (0, 0, 1, 0),
        (3, 0, 0, 1): (0, 2, 0, 0),
        (7, 0, 0, 0): (0, 1, 0, 0),
    }
    assert {b.lead: b.tail for b in basis7911} == printed


def test_basis_invariants(basis57, basis7911):
    for B in (basis57, basis7911):
        assert is_reduced(B.elements)
        assert is_groebner(B.elements)
        assert (B.spec[0],) + (0,) * B.spec.k in B.leads
        for b in B:
            assert b.lead > b.tail
            assert weight(b.lead, B.spec) == weight(b.tail, B.spec)
            if b.lead[0] == 0:
                assert b.tail[0] == 0
        assert list(B.leads) == sorted(B.leads, reverse=True)


def test_reduce_monomial(basis57):
    assert reduce_monomial(basis57, (6, 0, 0)) == (1, 1, 0)
    assert reduce_monomial(basis57, (1, 3, 1)) == (1, 3, 1)
    assert reduce_monomial(basis57, (35, 0, 0)) == (0, 0, 5)
    with pytest.raises(LengthMismatch):
        reduce_monomial(basis57, (1, 0))


def test_reduce_fuel(basis57):
    with pytest.raises(ResourceLimit):
        reduce_monomial(basis57, (35, 0, 0), fuel=2)
    assert reduce_monomial(basis57, (35, 0, 0), fuel=1000) == (0, 0, 5)


def test_normal_form_of_power(basis57, basis7911):
    assert normal_form_of_power(basis57, 23) == (1, 3, 1)
    assert normal_form_of_power(basis7911, 13) == (2, 0, 0, 1)
    assert normal_form_of_power(basis57, 0) == (0, 0, 0)
    assert normal_form_of_power(basis7911, 0) == (0, 0, 0, 0)


def test_resource_limit():
    with pytest.raises(ResourceLimit):
        buchberger((7, 9, 11), max_pairs=1)
    with pytest.raises(ResourceLimit):
        buchberger((7, 9, 11), max_basis=3)


def test_interreduce_drops_redundant():
    elems = [
        Binomial((5, 0, 0), (0, 1, 0)),
        Binomial((7, 0, 0), (0, 0, 1)),
        Binomial((2, 1, 0), (0, 0, 1)),
    ]
    out = interreduce(elems)
    assert [b.lead for b in out] == [(5, 0, 0), (2, 1, 0)]


def _specs(n, seed):
    rng = random.Random(seed)
    return [random_spec(rng, k_max=4, a_max=30) for _ in range(n)]


@pytest.mark.parametrize("S", _specs(25, 11), ids=str)
def test_random_bases(S):
    B = buchberger(S)
    assert is_reduced(B.elements)
    assert is_groebner(B.elements)
    c = invariants(S).conductor
    top = 3 * c + 2
    nfs = normal_forms_upto(B, top)
    assert len(set(nfs)) == len(nfs)  # injectivity
    for N, nf in enumerate(nfs):
        assert nf == normal_form_of_power(B, N)
        assert weight(nf, S) == N
        assert (nf[0] == 0) == is_member(S, N)
        assert nf[0] < S[0]
        assert reduce_monomial(B, nf) == nf  # idempotent
    for b in B:
        if b.lead[0] == 0:
            assert b.tail[0] == 0


@pytest.mark.parametrize("S", _specs(10, 12), ids=str)
def test_confluence(S):
    B = buchberger(S)
    rng = random.Random(str(S))
    for _ in range(40):
        m = tuple(rng.randint(0, 12) for _ in range(S.k + 1))
        order = list(B.elements)
        rng.shuffle(order)
        assert reduce_monomial(order, m) == reduce_monomial(B, m)


def test_basis_is_unique_under_generator_order():
    # Same semigroup, generators given in another order and with repeats.
    assert buchberger(normalize([11, 7, 9, 7])).elements == buchberger((7, 9, 11)).elements


def test_golden_tails_57(basis57):
    printed = {
        (0, 7, 0): (0, 0, 5),
        (1, 0, 2): (0, 3, 0),
        (1, 4, 0): (0, 0, 3),
        (2, 1, 0): (0, 0, 1),
        (3, 0, 1): (0, 2, 0),
        (5, 0, 0): (0, 1, 0),
    }
    assert {b.lead: b.tail for b in basis57} == printed
