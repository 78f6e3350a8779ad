"""
Slow reference implementations, written straight from the recursive
definition of the families and of the norm. Nothing here is cached or
shortcut; tests hold the fast paths in :mod:`.families` and
:mod:`.norms` against these.

>>> from schreier.spaces.ordinals import Ordinal
>>> member_bruteforce(FinSet([2, 3, 4, 5, 6]), Ordinal(0, 2))
True
>>> member_bruteforce(FinSet([2, 3, 4]), Ordinal(0, 1))
False
"""

import logging

import more_itertools

from . import config
from .errors import ResourceLimit
from .families import FinSet
from .norms import Exponent, NormValue
from .ordinals import approximant

log = logging.getLogger(__name__)


def _unroll(elements, alpha):
    if not elements:
        return True
    if alpha.is_zero:
        return len(elements) <= 1
    if alpha.is_successor:
        return _cuts(elements, alpha.predecessor, elements[0])
    return any(
        _unroll(elements, approximant(alpha, n)) for n in range(1, elements[0] + 1)
    )


def _cuts(elements, beta, count):
    """
    Can elements be cut into at most count consecutive members of S_β?
    Every position of the first cut is tried.
    """
    if not elements:
        return True
    if not count:
        return False
    return any(
        _unroll(elements[:cut], beta) and _cuts(elements[cut:], beta, count - 1)
        for cut in range(1, len(elements) + 1)
    )


def member_bruteforce(F, alpha, budget=None):
    F = FinSet(F)
    limit = config.resolve(budget).oracle_support
    if len(F) > limit:
        raise ResourceLimit(resource='oracle_support', requested=len(F), limit=limit)
    return _unroll(tuple(F), alpha)


def norm_bruteforce(x, alpha, p, budget=None):
    """
    Maximize over every subset of the support.

    >>> from schreier.spaces.norms import Exact
    >>> from schreier.spaces.ordinals import Ordinal
    >>> from schreier.spaces.vectors import Vector
    >>> norm_bruteforce(Vector({2: 1, 3: 1, 4: 1}), Ordinal(0, 1), Exact(1))
    NormValue('2', p=1)
    """
    exponent = Exponent.parse(p)
    support = x.support
    limit = config.resolve(budget).oracle_support
    if len(support) > limit:
        raise ResourceLimit(
            resource='oracle_support', requested=len(support), limit=limit
        )
    with exponent.context():
        sums = (
            sum((exponent.weight(x[index]) for index in subset), exponent.zero)
            for subset in more_itertools.powerset(support)
            if member_bruteforce(subset, alpha, budget)
        )
        best = max(sums)
    log.debug("Oracle norm of %r in S_%s: %s", x, alpha, best)
    return NormValue(best, exponent)
