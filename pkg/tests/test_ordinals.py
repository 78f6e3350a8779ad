import pytest
from hypothesis import given

from schreier.spaces.errors import NotALimit
from schreier.spaces.ordinals import (
    Limit,
    Ordering,
    Ordinal,
    Successor,
    Zero,
    approximant,
    canonical,
    classify,
    compare,
)

from .strategies import ordinals


@pytest.mark.parametrize('text', ['0', '3', 'w', 'w+2', 'w*2', 'w*2+5', 'w*12+10'])
def test_parse_round_trip(text):
    assert str(Ordinal.parse(text)) == text


@pytest.mark.parametrize(
    'text', ['w*1', 'w+0', 'w*0', '07', 'w*02', '-1', 'w^2', '', 'omega', 'w+']
)
def test_parse_rejects_noncanonical(text):
    with pytest.raises(ValueError):
        Ordinal.parse(text)


@given(ordinals)
def test_printed_form_parses_back(alpha):
    assert Ordinal.parse(str(alpha)) == alpha


def test_negative_coefficient():
    with pytest.raises(ValueError):
        Ordinal(0, -1)


@pytest.mark.parametrize(
    'alpha, kind',
    [
        (Ordinal(0, 0), Zero()),
        (Ordinal(0, 3), Successor(Ordinal(0, 2))),
        (Ordinal(2, 0), Limit()),
        (Ordinal(1, 1), Successor(Ordinal(1, 0))),
    ],
)
def test_classify(alpha, kind):
    assert classify(alpha) == kind


def test_predicates():
    assert Ordinal(0, 0).is_zero
    assert Ordinal(1, 0).is_limit and not Ordinal(1, 0).is_successor
    assert Ordinal(1, 0).predecessor is None
    assert Ordinal(1, 4).predecessor == Ordinal(1, 3)
    assert Ordinal(1, 4).successor() == Ordinal(1, 5)


@pytest.mark.parametrize(
    'alpha, n, expected',
    [
        (Ordinal(1, 0), 1, Ordinal(0, 1)),
        (Ordinal(1, 0), 5, Ordinal(0, 5)),
        (Ordinal(2, 0), 3, Ordinal(1, 3)),
    ],
)
def test_approximant(alpha, n, expected):
    assert approximant(alpha, n) == expected
    assert canonical(alpha, n) == expected


@pytest.mark.parametrize('alpha', [Ordinal(0, 0), Ordinal(0, 4), Ordinal(1, 2)])
def test_approximant_needs_limit(alpha):
    with pytest.raises(NotALimit):
        approximant(alpha, 1)


def test_approximant_index_from_one():
    with pytest.raises(ValueError):
        approximant(Ordinal(1, 0), 0)


@given(ordinals)
def test_approximants_are_increasing_successors(alpha):
    if not alpha.is_limit:
        return
    terms = [approximant(alpha, n) for n in range(1, 6)]
    assert all(term.is_successor and term < alpha for term in terms)
    assert terms == sorted(set(terms))


@pytest.mark.parametrize(
    'alpha, beta, expected',
    [
        (Ordinal(0, 5), Ordinal(1, 0), Ordering.LESS),
        (Ordinal(1, 0), Ordinal(1, 0), Ordering.EQUAL),
        (Ordinal(1, 2), Ordinal(0, 9), Ordering.GREATER),
    ],
)
def test_compare(alpha, beta, expected):
    assert compare(alpha, beta) is expected


@given(ordinals, ordinals)
def test_compare_antisymmetric(alpha, beta):
    assert compare(alpha, beta) == -compare(beta, alpha)
