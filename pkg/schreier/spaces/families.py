"""
schreier.spaces.families

Membership, maximality, enumeration and block decomposition for the
Schreier families S_α, α < ω².

Synopsis::

    >>> from schreier.spaces.ordinals import Ordinal
    >>> is_member(FinSet([2, 5]), Ordinal(0, 1))
    True
    >>> is_member(FinSet([2, 3, 4, 5]), Ordinal(0, 2))
    True
    >>> decompose_maximal(FinSet(range(2, 8)), Ordinal(0, 2))
    [FinSet([2, 3]), FinSet([4, 5, 6, 7])]

Description

S_0 holds the sets with at most one element. S_{β+1} holds the unions
E_1 < ... < E_n of members of S_β with n ⩽ min E_1. At a limit α, F
belongs to S_α when it belongs to S_{α_n} for some n ⩽ min F, where
(α_n) is the canonical fundamental sequence of
:func:`schreier.spaces.ordinals.approximant`.

Membership at a successor peels the longest admissible prefix
repeatedly. The fewest blocks a set can be cut into is reached this
way because every sub-interval of a member is a member. At a limit only
n = min F is consulted, since the approximating families increase.
"""

import functools
import itertools
import logging

import more_itertools

from . import config
from .errors import (
    ConstructionFailed,
    InternalInconsistency,
    NotAMember,
    NotASpread,
    NotMaximal,
    NotSuccessor,
    ResourceLimit,
)
from .ordinals import Ordinal, approximant
from .util import longest_prefix, parse_indices

log = logging.getLogger(__name__)


class FinSet(tuple):
    """
    A finite, strictly increasing set of positive integers.

    >>> FinSet([2, 3, 5])
    FinSet([2, 3, 5])
    >>> FinSet.of({5, 3, 2}) == FinSet([2, 3, 5])
    True
    >>> FinSet([3, 2])
    Traceback (most recent call last):
    ...
    ValueError: FinSet elements must be strictly increasing: (3, 2)
    >>> FinSet([2, 3]).precedes(FinSet([4])), FinSet().precedes(FinSet([1]))
    (True, True)
    """

    def __new__(cls, elements=()):
        items = tuple(map(int, elements))
        if any(item < 1 for item in items):
            raise ValueError(f"FinSet elements must be positive: {items}")
        if any(a >= b for a, b in more_itertools.pairwise(items)):
            raise ValueError(f"FinSet elements must be strictly increasing: {items}")
        return super().__new__(cls, items)

    @classmethod
    def of(cls, elements):
        return cls(sorted(set(elements)))

    @classmethod
    def parse(cls, spec):
        """
        Accept ``2,3,5``, ``[2,3,5]`` or any iterable of integers.

        >>> FinSet.parse('[2, 3,5]')
        FinSet([2, 3, 5])
        >>> FinSet.parse('')
        FinSet([])
        """
        if isinstance(spec, str):
            spec = spec.strip().strip('[]')
        return cls(parse_indices(spec))

    def __repr__(self):
        return f'{self.__class__.__name__}({list(self)})'

    def __str__(self):
        return '{' + ', '.join(map(str, self)) + '}'

    @property
    def minimum(self):
        return self[0] if self else None

    @property
    def maximum(self):
        return self[-1] if self else None

    def union(self, *others):
        return self.of(itertools.chain(self, *others))

    def precedes(self, other):
        """
        E < E' in the sense of max E < min E'; vacuous if either is empty.
        """
        return not self or not other or self[-1] < other[0]

    def as_json(self):
        return list(self)


def _member(elements, q, r):
    if len(elements) <= 1:
        return True
    least = elements[0]
    if least == 1:
        # {1} is maximal in every family
        return False
    if len(elements) <= 1 << r:
        # halve repeatedly: min ⩾ 2 affords two blocks at every level
        return True
    if not q and r == 1:
        return len(elements) <= least
    return _member_recursive(elements, q, r)


@functools.lru_cache(maxsize=1 << 14)
def _member_recursive(elements, q, r):
    least = elements[0]
    if not r:
        return bool(q) and _member(elements, q - 1, least)
    return _block_count(elements, q, r - 1, least) <= least


def _block_count(elements, q, r, limit=None):
    """
    Count the blocks of S_{ω·q+r} found by peeling longest prefixes,
    stopping as soon as the count exceeds limit.
    """
    count = 0
    rest = elements
    while rest and (limit is None or count <= limit):
        size = longest_prefix(rest, lambda prefix: _member(prefix, q, r))
        rest = rest[size:]
        count += 1
    return count if not rest else count + 1


def _greedy_blocks(elements, beta):
    blocks = []
    rest = tuple(elements)
    while rest:
        size = longest_prefix(rest, lambda prefix: _member(prefix, beta.q, beta.r))
        blocks.append(FinSet(rest[:size]))
        rest = rest[size:]
    return blocks


def admissible(alpha):
    """
    Return a membership predicate for S_α over increasing tuples,
    skipping the validation :func:`is_member` performs.

    >>> member = admissible(Ordinal(0, 1))
    >>> member((2, 3)), member((2, 3, 4))
    (True, False)
    """
    return lambda elements: _member(tuple(elements), alpha.q, alpha.r)


def is_member(F, alpha, budget=None):
    """
    Is F a member of S_α?

    >>> is_member(FinSet([1, 2]), Ordinal(0, 1))
    False
    >>> is_member(FinSet(), Ordinal(0, 0))
    True
    >>> is_member(FinSet([3, 4, 5, 6]), Ordinal(1, 0))
    True
    """
    elements = tuple(FinSet(F))
    result = _member(elements, alpha.q, alpha.r)
    if alpha.is_limit and elements and config.resolve(budget).cross_check_limits:
        _cross_check_limit(elements, alpha, result)
    return result


def _cross_check_limit(elements, alpha, result):
    for n in range(1, elements[0]):
        lower = approximant(alpha, n)
        if _member(elements, lower.q, lower.r) and not result:
            raise InternalInconsistency(
                "approximating families are not increasing",
                set=list(elements),
                alpha=str(alpha),
                n=n,
            )
    log.debug("Limit membership of %s in S_%s cross-checked", elements, alpha)


def is_maximal(F, alpha):
    """
    Is F a member of S_α without proper supersets in S_α?

    A non-maximal member G extends by every l > max G, so a single
    right extension decides maximality. The empty set is not maximal,
    since every singleton extends it.

    >>> is_maximal(FinSet([2, 3]), Ordinal(0, 1))
    True
    >>> is_maximal(FinSet([3, 4]), Ordinal(0, 1))
    False
    >>> is_maximal(FinSet([1]), Ordinal(0, 2))
    True
    >>> is_maximal(FinSet(), Ordinal(0, 1))
    False
    """
    F = FinSet(F)
    if not is_member(F, alpha):
        raise NotAMember(set=F.as_json(), alpha=str(alpha))
    if not F:
        return False
    return not _member(F + (F[-1] + 1,), alpha.q, alpha.r)


def decompose_maximal(G, alpha):
    """
    Split a maximal G of S_{β+1} into G_1 < ... < G_m, each maximal in
    S_β, with m = min G_1.

    >>> decompose_maximal(FinSet([3, 4, 5]), Ordinal(0, 1))
    [FinSet([3]), FinSet([4]), FinSet([5])]
    """
    G = FinSet(G)
    if not alpha.is_successor:
        raise NotSuccessor(alpha=str(alpha))
    if not is_member(G, alpha) or not is_maximal(G, alpha):
        raise NotMaximal(set=G.as_json(), alpha=str(alpha))
    beta = alpha.predecessor
    blocks = _greedy_blocks(G, beta)
    if _is_maximal_decomposition(G, blocks, beta):
        return blocks
    log.warning("Greedy decomposition of %s in S_%s rejected; searching", G, alpha)
    found = more_itertools.first(
        (
            candidate
            for candidate in _decompositions(G, G[0])
            if _is_maximal_decomposition(G, candidate, beta)
        ),
        None,
    )
    if found is None:
        raise InternalInconsistency(
            "maximal set has no decomposition into maximal blocks",
            set=G.as_json(),
            alpha=str(alpha),
        )
    return found


def _decompositions(G, count):
    """
    Every split of G into count consecutive nonempty blocks.
    """
    for cuts in itertools.combinations(range(1, len(G)), count - 1):
        bounds = (0,) + cuts + (len(G),)
        yield [FinSet(G[start:stop]) for start, stop in more_itertools.pairwise(bounds)]


def _is_maximal_decomposition(G, blocks, beta):
    return (
        bool(blocks)
        and len(blocks) == blocks[0][0] == G[0]
        and all(block and is_maximal(block, beta) for block in blocks)
    )


def members_within(universe, alpha):
    """
    Yield every member of S_α contained in universe, in lexicographic
    order, never extending a non-member.

    >>> list(members_within([2, 3, 4], Ordinal(0, 1)))
    [FinSet([]), FinSet([2]), FinSet([2, 3]), FinSet([2, 4]), FinSet([3]), FinSet([3, 4]), FinSet([4])]
    """
    universe = FinSet.of(universe)

    def extend(current, start):
        yield FinSet(current)
        for index in range(start, len(universe)):
            candidate = current + (universe[index],)
            if _member(candidate, alpha.q, alpha.r):
                yield from extend(candidate, index + 1)

    return extend((), 0)


def _check_enumeration(N, budget):
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    limit = config.resolve(budget).enumeration
    if 2**N > limit:
        raise ResourceLimit(resource='enumeration', requested=2**N, limit=limit)


def enumerate_sets(alpha, N, budget=None):
    """
    Every member of S_α contained in {1..N}, the empty set included.

    >>> enumerate_sets(Ordinal(0, 0), 3)
    [FinSet([]), FinSet([1]), FinSet([2]), FinSet([3])]
    >>> len(enumerate_sets(Ordinal(0, 1), 4))
    8
    """
    _check_enumeration(N, budget)
    found = list(members_within(range(1, N + 1), alpha))
    log.debug("S_%s restricted to {1..%d} has %d members", alpha, N, len(found))
    return found


def enumerate_maximal(alpha, N, budget=None):
    """
    Members of S_α inside {1..N} that are maximal in all of S_α.

    >>> enumerate_maximal(Ordinal(0, 1), 4)
    [FinSet([1]), FinSet([2, 3]), FinSet([2, 4])]
    >>> enumerate_maximal(Ordinal(0, 2), 3)
    [FinSet([1])]
    """
    return [F for F in enumerate_sets(alpha, N, budget) if is_maximal(F, alpha)]


def spread(F, image):
    """
    Return image if it spreads F pointwise to the right.

    >>> spread(FinSet([2, 3]), FinSet([2, 7]))
    FinSet([2, 7])
    """
    F, image = FinSet(F), FinSet(image)
    if len(F) != len(image) or any(a > b for a, b in zip(F, image)):
        raise NotASpread(set=F.as_json(), image=image.as_json())
    return image


def complete_to_maximal(F, alpha, budget=None):
    """
    Extend a nonempty member F by max F + 1, max F + 2, ... until it
    becomes maximal.

    >>> complete_to_maximal(FinSet([3, 5]), Ordinal(0, 1))
    FinSet([3, 5, 6])
    >>> complete_to_maximal(FinSet([4, 6]), Ordinal(0, 1))
    FinSet([4, 6, 7, 8])
    """
    F = FinSet(F)
    if not F or not is_member(F, alpha):
        raise NotAMember(set=F.as_json(), alpha=str(alpha))
    cap = config.resolve(budget).witness_search
    tail = range(F[-1] + 1, F[-1] + cap + 2)
    size = longest_prefix(tail, lambda prefix: _member(F + tuple(prefix), alpha.q, alpha.r))
    if size > cap:
        raise ConstructionFailed(
            "no maximal extension within the search budget",
            set=F.as_json(),
            alpha=str(alpha),
            limit=cap,
        )
    return FinSet(F + tuple(tail[:size]))


def check_good_sequence(alpha, N, n_max):
    """
    Check that S_{β_n} ∩ P({1..N}) ⊆ S_{β_{n+1}} for n ⩽ n_max, where
    α_n = β_n + 1 are the approximants of the limit α. Returns the
    counterexamples as (n, F) pairs.

    >>> check_good_sequence(Ordinal(1, 0), 8, 4)
    []
    """
    failures = []
    for n in range(1, n_max + 1):
        lower = approximant(alpha, n).predecessor
        upper = approximant(alpha, n + 1).predecessor
        failures.extend(
            (n, F)
            for F in members_within(range(1, N + 1), lower)
            if not is_member(F, upper)
        )
    return failures
