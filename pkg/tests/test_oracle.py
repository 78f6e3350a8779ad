import itertools

import more_itertools
import pytest

from schreier.spaces import config
from schreier.spaces.errors import ResourceLimit
from schreier.spaces.families import FinSet
from schreier.spaces.norms import Exact
from schreier.spaces.oracle import member_bruteforce, norm_bruteforce
from schreier.spaces.ordinals import Ordinal
from schreier.spaces.vectors import Vector

ORDERS = [Ordinal(0, r) for r in range(4)]


@pytest.mark.parametrize(
    'F, alpha, expected',
    [
        ([2, 3, 4, 5, 6], Ordinal(0, 2), True),
        ([2, 3, 4], Ordinal(0, 1), False),
        ([1], Ordinal(1, 0), True),
        ([1, 2], Ordinal(1, 1), False),
        ([3, 4, 5, 6], Ordinal(1, 0), True),
    ],
)
def test_member_bruteforce(F, alpha, expected):
    assert member_bruteforce(FinSet(F), alpha) is expected


@pytest.mark.parametrize('alpha', ORDERS)
def test_oracle_is_hereditary_and_spreading(alpha):
    members = [
        FinSet(F)
        for F in more_itertools.powerset(range(1, 9))
        if member_bruteforce(F, alpha)
    ]
    known = set(members)
    for F in members:
        for G in itertools.combinations(F, len(F) - 1) if F else ():
            assert FinSet(G) in known
        if F and F.maximum < 8:
            assert FinSet(F[:-1] + (F.maximum + 1,)) in known


def test_member_budget():
    with pytest.raises(ResourceLimit):
        member_bruteforce(FinSet(range(2, 10)), Ordinal(0, 2), config.Budget(dict(oracle_support=4)))


def test_norm_bruteforce():
    x = Vector({1: 1, 2: 1, 3: 1, 4: 1, 5: 1})
    assert norm_bruteforce(x, Ordinal(0, 2), Exact(1)).pth_power == 4
    assert norm_bruteforce(Vector(), Ordinal(0, 1), Exact(2)).pth_power == 0
