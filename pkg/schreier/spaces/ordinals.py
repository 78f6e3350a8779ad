"""
schreier.spaces.ordinals

Ordinal notations below ω², written ``ω·q + r``.

Ordinals index the Schreier families. Externally they are spelled
``0``, ``3``, ``w``, ``w+2``, ``w*2``, ``w*2+5``::

    >>> alpha = Ordinal.parse('w*2+5')
    >>> alpha.q, alpha.r
    (2, 5)
    >>> str(alpha)
    'w*2+5'
    >>> Ordinal(0, 5) < Ordinal(1, 0)
    True
"""

import dataclasses
import enum
import re
import typing

from .errors import NotALimit


@dataclasses.dataclass(frozen=True, order=True)
class Ordinal:
    """
    The ordinal ω·q + r. Field order makes the generated comparisons
    lexicographic on (q, r), which is the ordinal order.
    """

    q: int = 0
    r: int = 0

    pattern = re.compile(
        r'(?P<finite>0|[1-9]\d*)'
        r'|w(?:\*(?P<q>[2-9]|[1-9]\d+))?(?:\+(?P<r>[1-9]\d*))?'
    )

    def __post_init__(self):
        for value in (self.q, self.r):
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                tmpl = "Ordinal coefficients must be natural numbers: {!r}"
                raise ValueError(tmpl.format(self))

    @classmethod
    def parse(cls, text):
        """
        Parse the ordinal grammar; only canonical spellings are accepted
        so that printing a parsed ordinal reproduces the input.

        >>> Ordinal.parse('w')
        Ordinal(q=1, r=0)
        >>> Ordinal.parse('w*1')
        Traceback (most recent call last):
        ...
        ValueError: Not an ordinal below w^2: 'w*1'
        """
        if isinstance(text, cls):
            return text
        match = cls.pattern.fullmatch(str(text).strip())
        if not match:
            raise ValueError(f"Not an ordinal below w^2: {text!r}")
        if match['finite'] is not None:
            return cls(0, int(match['finite']))
        return cls(int(match['q'] or 1), int(match['r'] or 0))

    def __str__(self):
        if not self.q:
            return str(self.r)
        head = 'w' if self.q == 1 else f'w*{self.q}'
        return f'{head}+{self.r}' if self.r else head

    @property
    def is_zero(self):
        return not self.q and not self.r

    @property
    def is_successor(self):
        return self.r > 0

    @property
    def is_limit(self):
        return self.q > 0 and not self.r

    @property
    def predecessor(self):
        """
        The ordinal β with self = β + 1, or None.
        """
        return Ordinal(self.q, self.r - 1) if self.r else None

    def successor(self):
        return Ordinal(self.q, self.r + 1)


@dataclasses.dataclass(frozen=True)
class Zero:
    pass


@dataclasses.dataclass(frozen=True)
class Successor:
    pred: Ordinal


@dataclasses.dataclass(frozen=True)
class Limit:
    pass


def classify(alpha):
    """
    >>> classify(Ordinal(0, 0))
    Zero()
    >>> classify(Ordinal(0, 3))
    Successor(pred=Ordinal(q=0, r=2))
    >>> classify(Ordinal(2, 0))
    Limit()
    """
    if alpha.is_zero:
        return Zero()
    if alpha.is_successor:
        return Successor(alpha.predecessor)
    return Limit()


class FundamentalSequence(typing.Protocol):
    """
    Chooses the approximating sequence (α_n) of each limit α. Every
    term must be a successor and the predecessors must index an
    increasing chain of families.
    """

    def __call__(self, alpha: Ordinal, n: int) -> Ordinal: ...


def approximant(alpha, n):
    """
    The canonical fundamental sequence: for α = ω·(q'+1), α_n = ω·q' + n.

    >>> approximant(Ordinal(1, 0), 5)
    Ordinal(q=0, r=5)
    >>> approximant(Ordinal(2, 0), 3)
    Ordinal(q=1, r=3)
    >>> approximant(Ordinal(0, 4), 1)  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    NotALimit: ordinal is not a limit
    """
    if not alpha.is_limit:
        raise NotALimit(alpha=str(alpha))
    if n < 1:
        raise ValueError(f"Approximants are indexed from 1, got {n}")
    return Ordinal(alpha.q - 1, n)


canonical: FundamentalSequence = approximant


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def compare(alpha, beta):
    """
    >>> compare(Ordinal(0, 5), Ordinal(1, 0))
    <Ordering.LESS: -1>
    >>> compare(Ordinal(1, 2), Ordinal(0, 9)).name
    'GREATER'
    """
    return Ordering((alpha > beta) - (alpha < beta))
