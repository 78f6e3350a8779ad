"""
schreier.spaces.one_sets

The combinatorics of the unit sphere when p = 1.

Synopsis::

    >>> from schreier.spaces.ordinals import Ordinal
    >>> from schreier.spaces.vectors import Vector
    >>> x = Vector({2: '1/2', 3: '1/2'})
    >>> one_sets(x, Ordinal(0, 1))
    [FinSet([2, 3])]
    >>> gap(x, Ordinal(0, 1))
    Fraction(1, 2)
    >>> nonmaximal_one_set(Vector({4: '1/2', 5: '1/2'}), Ordinal(0, 1))
    FinSet([4, 5])

Description

A 1-set of a sphere vector x is an admissible F ⊆ supp(x) on which the
absolute coordinates of x sum to exactly 1. The gap g is the distance
from 1 to the largest sum over admissible sets that are not 1-sets:
every such set sums to at most 1 - g, so any ε < g separates them
strictly.

For α = 1 a sphere vector has at most one non-maximal 1-set, and that
set is the tail ``[min F, ∞) ∩ supp(x)`` of the support.
"""

import dataclasses
import fractions
import logging
import typing

from . import config
from .errors import InternalInconsistency, NotOnSphere, ResourceLimit, UnsupportedOrder
from .families import FinSet, is_maximal, members_within
from .norms import Exact, norm, norming_sets
from .ordinals import Ordinal

log = logging.getLogger(__name__)

ONE = Exact(1)


def require_sphere(x, alpha, p=ONE, budget=None):
    """
    Raise NotOnSphere unless x lies on the unit sphere at (α, p).
    """
    value = norm(x, alpha, p, budget)
    if not value.is_close(value.exponent.one):
        raise NotOnSphere(vector=x.as_json(), norm=value.as_json(), alpha=str(alpha))
    return value


def one_sets(x, alpha, budget=None):
    """
    Every 1-set of the sphere vector x, sorted.

    >>> from schreier.spaces.vectors import Vector
    >>> one_sets(Vector({4: '1/2', 5: '1/2', 9: '1/2'}), Ordinal(0, 1))  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    NotOnSphere: vector is not on the unit sphere
    """
    require_sphere(x, alpha, budget=budget)
    return norming_sets(x, alpha, ONE, budget)


def gap(x, alpha, budget=None):
    """
    >>> from schreier.spaces.vectors import Vector
    >>> gap(Vector.basis(2), Ordinal(0, 1))
    Fraction(1, 1)
    >>> gap(Vector({2: '2/3', 3: '1/3'}), Ordinal(0, 1))
    Fraction(1, 3)
    """
    require_sphere(x, alpha, budget=budget)
    support = x.support
    limit = config.resolve(budget).support
    if len(support) > limit:
        raise ResourceLimit(resource='support', requested=len(support), limit=limit)
    sums = (sum(abs(x[index]) for index in F) for F in members_within(support, alpha))
    below = max((total for total in sums if total < 1), default=fractions.Fraction(0))
    return 1 - fractions.Fraction(below)


def nonmaximal_one_sets(x, alpha, budget=None):
    return [F for F in one_sets(x, alpha, budget) if not is_maximal(F, alpha)]


def nonmaximal_one_set(x, alpha, budget=None):
    """
    The unique non-maximal 1-set of x in S_1, or None.

    >>> from schreier.spaces.vectors import Vector
    >>> nonmaximal_one_set(Vector({2: '1/2', 3: '1/2'}), Ordinal(0, 1)) is None
    True
    >>> nonmaximal_one_set(Vector.basis(7), Ordinal(0, 1))
    FinSet([7])
    """
    if alpha != Ordinal(0, 1):
        raise UnsupportedOrder(
            "uniqueness of the non-maximal 1-set holds only for S_1",
            alpha=str(alpha),
        )
    found = nonmaximal_one_sets(x, alpha, budget)
    if not found:
        return None
    F, *others = found
    tail = FinSet(index for index in x.support if index >= F.minimum)
    if others or F != tail:
        raise InternalInconsistency(
            "non-maximal 1-sets are not a single tail of the support",
            vector=x.as_json(),
            sets=[G.as_json() for G in found],
        )
    return F


@dataclasses.dataclass
class OneSetReport:
    one_sets: typing.List[FinSet]
    gap: fractions.Fraction
    nonmaximal_one_set: typing.Optional[FinSet] = None
    nonmaximal: typing.List[FinSet] = dataclasses.field(default_factory=list)
    alpha: Ordinal = Ordinal(0, 1)

    def as_json(self):
        """
        >>> report = OneSetReport([FinSet([2, 3])], fractions.Fraction(1, 2))
        >>> report.as_json()
        {'one_sets': [[2, 3]], 'gap': '1/2', 'nonmaximal_one_set': None}
        """
        data = dict(
            one_sets=[F.as_json() for F in self.one_sets],
            gap=str(self.gap),
        )
        if self.alpha == Ordinal(0, 1):
            found = self.nonmaximal_one_set
            data.update(nonmaximal_one_set=found.as_json() if found else None)
        else:
            data.update(nonmaximal_one_sets=[F.as_json() for F in self.nonmaximal])
        return data


def report(x, alpha, budget=None):
    """
    Gather the 1-sets, the gap and the non-maximal 1-sets of x. Beyond
    S_1 all non-maximal 1-sets are listed, since no uniqueness holds.
    """
    sets = one_sets(x, alpha, budget)
    nonmaximal = [F for F in sets if not is_maximal(F, alpha)]
    unique = nonmaximal_one_set(x, alpha, budget) if alpha == Ordinal(0, 1) else None
    log.debug("1-sets of %r in S_%s: %s", x, alpha, sets)
    return OneSetReport(
        one_sets=sets,
        gap=gap(x, alpha, budget),
        nonmaximal_one_set=unique,
        nonmaximal=nonmaximal,
        alpha=alpha,
    )
