"""
Finitely supported vectors with exact rational coordinates, and the
sign sequences of diagonal maps.
"""

import collections.abc
import fractions
import json

from .errors import SignsMissing
from .families import FinSet


class Vector(collections.abc.Mapping):
    """
    An element of c_00: a finite map from indices (from 1) to nonzero
    rationals. Missing coordinates read as zero.

    >>> x = Vector({2: '1/2', 3: '1/2'})
    >>> x[2], x[7]
    (Fraction(1, 2), Fraction(0, 1))
    >>> x.support
    FinSet([2, 3])
    >>> x - Vector.basis(2)
    Vector({2: '-1/2', 3: '1/2'})
    >>> Vector.basis(3) + Vector.basis(3) - 2 * Vector.basis(3)
    Vector({})
    """

    def __init__(self, coords=None):
        if coords is None:
            coords = {}
        cleaned = {}
        for index, value in dict(coords).items():
            index = int(index)
            if index < 1:
                raise ValueError(f"Vector indices start at 1, got {index}")
            value = fractions.Fraction(value)
            if value:
                cleaned[index] = value
        self._coords = dict(sorted(cleaned.items()))

    @classmethod
    def basis(cls, index):
        return cls({index: 1})

    @classmethod
    def from_json(cls, text):
        """
        >>> Vector.from_json('{"2": "3/5", "3": "4/5"}')
        Vector({2: '3/5', 3: '4/5'})
        """
        data = json.loads(text) if isinstance(text, str) else text
        if not isinstance(data, collections.abc.Mapping):
            raise TypeError("A vector is a JSON object of index -> rational")
        return cls({index: str(value) for index, value in data.items()})

    def as_json(self):
        return {str(index): str(value) for index, value in self.items()}

    def __getitem__(self, index):
        return self._coords.get(index, fractions.Fraction(0))

    def __iter__(self):
        return iter(self._coords)

    def __len__(self):
        return len(self._coords)

    def __contains__(self, index):
        return index in self._coords

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self):
        return hash(tuple(self._coords.items()))

    def __repr__(self):
        pairs = ', '.join(f'{index}: {str(value)!r}' for index, value in self.items())
        return f'{self.__class__.__name__}({{{pairs}}})'

    @property
    def support(self):
        return FinSet(self._coords)

    def __bool__(self):
        return bool(self._coords)

    def __add__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        indices = set(self) | set(other)
        return Vector({index: self[index] + other[index] for index in indices})

    def __neg__(self):
        return Vector({index: -value for index, value in self.items()})

    def __sub__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self + -other

    def __mul__(self, scalar):
        scalar = fractions.Fraction(scalar)
        return Vector({index: scalar * value for index, value in self.items()})

    __rmul__ = __mul__

    def restrict(self, indices):
        return Vector({index: self[index] for index in indices if index in self})


class SignSeq(tuple):
    """
    Signs θ_1, ..., θ_N, each ±1, read with 1-based indices.

    >>> theta = SignSeq([1, -1, 1])
    >>> theta[2], len(theta)
    (-1, 3)
    >>> theta.apply(Vector({1: '1/2', 2: '1/2'}))
    Vector({1: '1/2', 2: '-1/2'})
    >>> SignSeq.alternating(4)
    SignSeq([-1, 1, -1, 1])
    """

    def __new__(cls, signs=()):
        signs = tuple(map(int, signs))
        if any(sign not in (1, -1) for sign in signs):
            raise ValueError(f"Signs must be +1 or -1: {signs}")
        return super().__new__(cls, signs)

    @classmethod
    def parse(cls, spec):
        """
        >>> SignSeq.parse('+,-,+')
        SignSeq([1, -1, 1])
        >>> SignSeq.parse('[1, -1]')
        SignSeq([1, -1])
        """
        if isinstance(spec, str):
            items = [item.strip() for item in spec.strip().strip('[]').split(',')]
            spec = [item + '1' if item in ('+', '-') else item for item in items if item]
        return cls(spec)

    @classmethod
    def alternating(cls, length):
        """
        θ_i = (-1)^i.
        """
        return cls((-1) ** index for index in range(1, length + 1))

    def __getitem__(self, index):
        if isinstance(index, slice):
            return super().__getitem__(index)
        if index < 1:
            raise IndexError(f"Signs are indexed from 1, got {index}")
        return super().__getitem__(index - 1)

    def __repr__(self):
        return f'{self.__class__.__name__}({list(self)})'

    def covers(self, indices):
        return all(1 <= index <= len(self) for index in indices)

    def apply(self, x):
        """
        The diagonal map x -> (θ_i x(i)).
        """
        if not self.covers(x):
            raise SignsMissing(length=len(self), needed=x.support.maximum)
        return Vector({index: self[index] * value for index, value in x.items()})

    def as_json(self):
        return list(self)
