"""
schreier.spaces.norms

The norm of the p-convexified Schreier space on finitely supported
vectors:

    ‖x‖ = max { (Σ_{i∈F} |x(i)|^p)^{1/p} : F ∈ S_α }

Synopsis::

    >>> from schreier.spaces.ordinals import Ordinal
    >>> from schreier.spaces.vectors import Vector
    >>> x = Vector({2: 1, 3: 1, 4: 1})
    >>> norm(x, Ordinal(0, 1), Exact(1))
    NormValue('2', p=1)
    >>> norming_sets(x, Ordinal(0, 1), Exact(1))
    [FinSet([2, 3]), FinSet([2, 4]), FinSet([3, 4])]

Description

Only subsets of the support are searched, which loses nothing since
the families are hereditary. When the support itself is admissible the
norm is the full ℓ_p mass and no search happens at all; such vectors
are exempt from the support budget. Otherwise small supports are
searched by enumerating their admissible subsets and larger ones by
branch and bound on the remaining mass.

Integer exponents (:class:`Exact`) keep everything rational: the norm
may be irrational but its p-th power never is. Other exponents
(:class:`Approx`) use :mod:`mpmath` at a configurable working precision
and compare within a tolerance.
"""

import contextlib
import fractions
import logging
import math
import numbers

import mpmath

from . import config
from .errors import ResourceLimit
from .families import FinSet, admissible, is_member, members_within

log = logging.getLogger(__name__)


class Exponent:
    """
    Base for the exponent p ∈ [1, ∞) of the convexification.

    Subclasses decide the scalar type of p-th powers and how two of
    them compare.
    """

    tolerance = 0

    def __init__(self, p):
        if self.__class__ is Exponent:
            raise NotImplementedError("Exponent is an abstract base class")
        self.p = p

    @classmethod
    def parse(cls, spec):
        """
        Accept an exponent, an integer, a decimal string or the JSON
        form used by map tables.

        >>> Exponent.parse('2')
        Exact(2)
        >>> Exponent.parse('2.0')
        Exact(2)
        >>> Exponent.parse({'approx': '1.5'})
        Approx('1.5')
        >>> Exponent.parse({'exact': 3}) == Exact(3)
        True
        """
        if isinstance(spec, Exponent):
            return spec
        if isinstance(spec, dict):
            if set(spec) == {'exact'}:
                return Exact(spec['exact'])
            if set(spec) == {'approx'}:
                return Approx(spec['approx'])
            raise ValueError(f"Exponent JSON needs one of 'exact', 'approx': {spec}")
        if isinstance(spec, numbers.Integral):
            return Exact(spec)
        text = str(spec).strip()
        try:
            value = fractions.Fraction(text)
        except ValueError:
            return Approx(text)
        if value.denominator == 1:
            return Exact(value.numerator)
        return Approx(text)

    def context(self):
        return contextlib.nullcontext()

    def weight(self, value):
        "Return |value|^p."
        raise NotImplementedError

    @property
    def zero(self):
        return self.weight(0)

    @property
    def one(self):
        return self.weight(1)

    def power(self, value):
        return self.weight(value)

    def root(self, pth_power):
        raise NotImplementedError

    def close(self, a, b):
        return a == b

    def less(self, a, b):
        "Is a below b beyond the comparison tolerance?"
        return a < b and not self.close(a, b)

    def label(self):
        return self.p

    def as_json(self):
        raise NotImplementedError

    def _key(self):
        return (self.p,)

    def __eq__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__,) + self._key())


class Exact(Exponent):
    """
    An integer exponent, evaluated in rational arithmetic.

    >>> Exact(2).weight(fractions.Fraction(-3, 5))
    Fraction(9, 25)
    >>> Exact(0)
    Traceback (most recent call last):
    ...
    ValueError: Exact exponents are integers >= 1, got 0
    """

    dps = 20
    "Decimal digits used when rendering a norm as a real number"

    def __init__(self, p):
        if isinstance(p, bool) or int(p) != p or p < 1:
            raise ValueError(f"Exact exponents are integers >= 1, got {p}")
        super().__init__(int(p))

    def weight(self, value):
        return abs(fractions.Fraction(value)) ** self.p

    def root(self, pth_power):
        pth_power = fractions.Fraction(pth_power)
        with mpmath.workdps(self.dps):
            return mpmath.root(mpmath.mpf(pth_power.numerator) / pth_power.denominator, self.p)

    def as_json(self):
        return {'exact': self.p}

    def __repr__(self):
        return f'Exact({self.p})'


class Approx(Exponent):
    """
    A real exponent p > 1, evaluated with mpmath at ``dps`` decimal
    digits and compared within ``tolerance`` on the norm itself.

    >>> Approx('1.5').close(mpmath.mpf(1), mpmath.mpf(1) + mpmath.mpf('1e-15'))
    True
    """

    tolerance = 1e-12
    "Largest difference of two norms still reported as equal"

    dps = 50
    "Working precision in decimal digits"

    def __init__(self, p, tolerance=None, dps=None):
        if tolerance is not None:
            self.tolerance = float(tolerance)
        if dps is not None:
            self.dps = int(dps)
        if self.tolerance <= 0:
            raise ValueError(f"Tolerance must be positive, got {self.tolerance}")
        self.text = str(p).strip()
        with self.context():
            value = mpmath.mpf(self.text)
        if not value > 1:
            raise ValueError(f"Approx exponents must exceed 1, got {self.text}")
        super().__init__(value)

    def context(self):
        return mpmath.workdps(self.dps)

    def weight(self, value):
        value = abs(fractions.Fraction(value))
        with self.context():
            return (mpmath.mpf(value.numerator) / value.denominator) ** self.p

    def root(self, pth_power):
        with self.context():
            return mpmath.mpf(pth_power) ** (1 / self.p)

    def close(self, a, b):
        with self.context():
            return abs(self.root(a) - self.root(b)) <= self.tolerance

    def label(self):
        return self.text

    def as_json(self):
        return {'approx': self.text}

    def _key(self):
        return (self.text, self.tolerance, self.dps)

    def __repr__(self):
        return f'Approx({self.text!r})'


class NormValue:
    """
    A norm, held as its p-th power.

    >>> value = NormValue(fractions.Fraction(16, 5), Exact(2))
    >>> value.as_json() == {'pth_power': '16/5', 'p': 2, 'approx': value.approx}
    True
    >>> round(value.approx, 6)
    1.788854
    """

    def __init__(self, pth_power, exponent):
        self.pth_power = pth_power
        self.exponent = exponent

    @property
    def value(self):
        return self.exponent.root(self.pth_power)

    @property
    def approx(self):
        """
        The norm as a float, or as a decimal string when it is too
        large for one.

        >>> NormValue(fractions.Fraction(10) ** 800, Exact(2)).approx
        '1.0e+400'
        """
        value = self.value
        approx = float(value)
        if math.isinf(approx):
            return mpmath.nstr(value, 15)
        return approx

    def is_close(self, other):
        """
        Compare with another norm value or a number, within the
        exponent's tolerance.
        """
        other = getattr(other, 'pth_power', other)
        return self.exponent.close(self.pth_power, other)

    def as_json(self):
        if isinstance(self.exponent, Exact):
            pth_power = str(self.pth_power)
        else:
            pth_power = mpmath.nstr(self.pth_power, self.exponent.dps)
        return dict(
            pth_power=pth_power,
            p=self.exponent.label(),
            approx=self.approx,
        )

    def __eq__(self, other):
        if not isinstance(other, NormValue):
            return NotImplemented
        return (self.pth_power, self.exponent) == (other.pth_power, other.exponent)

    def __hash__(self):
        return hash((self.pth_power, self.exponent))

    def __repr__(self):
        pth_power = self.as_json()['pth_power']
        return f'{self.__class__.__name__}({pth_power!r}, p={self.exponent.label()})'


def full_mass(x, p):
    """
    The p-th power of the ℓ_p norm of x.

    >>> from schreier.spaces.vectors import Vector
    >>> full_mass(Vector({2: '3/5', 3: '-4/5'}), Exact(2))
    Fraction(1, 1)
    """
    exponent = Exponent.parse(p)
    with exponent.context():
        return sum((exponent.weight(value) for value in x.values()), exponent.zero)


def attains_full_mass(x, alpha):
    """
    Is the norm of x its full ℓ_p mass? That happens exactly when
    supp(x) is admissible, whatever the exponent.
    """
    return is_member(x.support, alpha)


def _search(x, alpha, exponent, budget):
    """
    Return the largest p-th power sum over admissible subsets of the
    support, together with every set attaining it.
    """
    support = x.support
    weights = {index: exponent.weight(x[index]) for index in support}
    if is_member(support, alpha):
        return sum(weights.values(), exponent.zero), [support]
    budget = config.resolve(budget)
    if len(support) > budget.support:
        raise ResourceLimit(
            resource='support', requested=len(support), limit=budget.support
        )
    if len(support) < budget.brute_force_below:
        log.debug("Enumerating admissible subsets of %s", support)
        return _best(
            ((F, sum(map(weights.get, F), exponent.zero)) for F in members_within(support, alpha)),
            exponent,
        )
    log.debug("Branch and bound over %d indices in S_%s", len(support), alpha)
    return _branch_and_bound(support, weights, alpha, exponent)


def _best(candidates, exponent):
    best, found = exponent.zero, [FinSet()]
    for F, mass in candidates:
        if exponent.less(best, mass):
            best, found = mass, [F]
        elif exponent.close(best, mass) and F:
            found.append(F)
    return best, sorted(found)


def _branch_and_bound(support, weights, alpha, exponent):
    order = tuple(support)
    member = admissible(alpha)
    remaining = [exponent.zero] * (len(order) + 1)
    for index in reversed(range(len(order))):
        remaining[index] = remaining[index + 1] + weights[order[index]]

    best = exponent.zero
    found = []

    def visit(current, mass, start):
        nonlocal best, found
        if exponent.less(best, mass):
            best, found = mass, [FinSet(current)]
        elif current and exponent.close(best, mass):
            found.append(FinSet(current))
        for index in range(start, len(order)):
            if exponent.less(mass + remaining[index], best):
                # nothing from here on can reach the best sum
                break
            candidate = current + (order[index],)
            if member(candidate):
                visit(candidate, mass + weights[order[index]], index + 1)

    visit((), exponent.zero, 0)
    return best, sorted(found)


def norm(x, alpha, p, budget=None):
    """
    >>> from schreier.spaces.ordinals import Ordinal
    >>> from schreier.spaces.vectors import Vector
    >>> norm(Vector({2: '3/5', 3: '4/5'}), Ordinal(0, 1), Exact(2)).pth_power
    Fraction(1, 1)
    >>> norm(Vector(), Ordinal(0, 1), Exact(1)).pth_power
    Fraction(0, 1)
    """
    exponent = Exponent.parse(p)
    with exponent.context():
        best, _ = _search(x, alpha, exponent, budget)
    return NormValue(best, exponent)


def norming_sets(x, alpha, p, budget=None):
    """
    Every admissible F ⊆ supp(x) attaining the norm, sorted. The zero
    vector is normed by the empty set alone.

    >>> from schreier.spaces.ordinals import Ordinal
    >>> from schreier.spaces.vectors import Vector
    >>> norming_sets(Vector({2: '1/2', 3: '1/2'}), Ordinal(0, 1), Exact(1))
    [FinSet([2, 3])]
    >>> norming_sets(Vector(), Ordinal(0, 1), Exact(1))
    [FinSet([])]
    """
    exponent = Exponent.parse(p)
    with exponent.context():
        _, found = _search(x, alpha, exponent, budget)
    return found


def is_on_sphere(x, alpha, p, budget=None):
    """
    >>> from schreier.spaces.ordinals import Ordinal
    >>> from schreier.spaces.vectors import Vector
    >>> is_on_sphere(Vector({2: 1, 3: 1}), Ordinal(0, 1), Exact(1))
    False
    """
    value = norm(x, alpha, p, budget)
    return value.is_close(value.exponent.one)


def distance(x, y, alpha, p, budget=None):
    return norm(x - y, alpha, p, budget)


def apply_diagonal(theta, x):
    """
    The diagonal isometry x -> (θ_i x(i)).

    >>> from schreier.spaces.vectors import SignSeq, Vector
    >>> apply_diagonal(SignSeq([-1, -1, -1]), Vector.basis(3))
    Vector({3: '-1'})
    """
    return theta.apply(x)
