import itertools

import pytest

from nsgroebner import buchberger, build_staircase


@pytest.fixture(scope="session")
def basis57():
    return buchberger((5, 7))


@pytest.fixture(scope="session")
def basis7911():
    return buchberger((7, 9, 11))


@pytest.fixture(scope="session")
def model57(basis57):
    return build_staircase(basis57)


@pytest.fixture(scope="session")
def model7911(basis7911):
    return build_staircase(basis7911)


def brute_sums(gens, upto):
    """All values <= upto of nonnegative combinations, by explicit enumeration."""
    ranges = [range(upto // a + 1) for a in gens]
    out = set()
    for ys in itertools.product(*ranges):
        s = sum(y * a for y, a in zip(ys, gens))
        if s <= upto:
            out.add(s)
    return out
