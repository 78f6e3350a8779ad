import fractions

import pytest

from schreier.spaces.errors import NotOnSphere, UnsupportedOrder
from schreier.spaces.families import FinSet
from schreier.spaces.one_sets import (
    gap,
    nonmaximal_one_set,
    nonmaximal_one_sets,
    one_sets,
    report,
)
from schreier.spaces.ordinals import Ordinal
from schreier.spaces.vectors import Vector

S1, S2 = Ordinal(0, 1), Ordinal(0, 2)
Fraction = fractions.Fraction


@pytest.mark.parametrize(
    'x, expected',
    [
        (Vector({2: '1/2', 3: '1/2'}), [[2, 3]]),
        (Vector.basis(7), [[7]]),
        (Vector({2: '1/2', 3: '1/2', 4: '-1/2'}), [[2, 3], [2, 4], [3, 4]]),
    ],
)
def test_one_sets(x, expected):
    assert one_sets(x, S1) == [FinSet(F) for F in expected]


def test_one_sets_off_sphere():
    with pytest.raises(NotOnSphere):
        one_sets(Vector({4: '1/2', 5: '1/2', 9: '1/2'}), S1)


@pytest.mark.parametrize(
    'x, expected',
    [
        (Vector({2: '1/2', 3: '1/2'}), Fraction(1, 2)),
        (Vector.basis(2), Fraction(1)),
        (Vector({2: '2/3', 3: '1/3'}), Fraction(1, 3)),
        (Vector({3: '1/2', 4: '1/4', 5: '1/4'}), Fraction(1, 4)),
    ],
)
def test_gap(x, expected):
    assert gap(x, S1) == expected


@pytest.mark.parametrize(
    'x, expected',
    [
        (Vector({4: '1/2', 5: '1/2'}), FinSet([4, 5])),
        (Vector({2: '1/2', 3: '1/2'}), None),
        (Vector.basis(7), FinSet([7])),
    ],
)
def test_nonmaximal_one_set(x, expected):
    assert nonmaximal_one_set(x, S1) == expected


def test_nonmaximal_one_set_only_for_s1():
    with pytest.raises(UnsupportedOrder):
        nonmaximal_one_set(Vector.basis(7), S2)


def test_nonmaximal_beyond_s1():
    x = Vector({3: '1/2', 4: '1/2'})
    assert nonmaximal_one_sets(x, S2) == [FinSet([3, 4])]


def test_report():
    data = report(Vector({4: '1/2', 5: '1/2'}), S1).as_json()
    assert data == dict(one_sets=[[4, 5]], gap='1/2', nonmaximal_one_set=[4, 5])


def test_report_beyond_s1():
    data = report(Vector({2: '1/2', 3: '1/2'}), S2).as_json()
    assert data == dict(one_sets=[[2, 3]], gap='1/2', nonmaximal_one_sets=[[2, 3]])
