import collections
import fractions

from more_itertools import always_iterable

from .errors import InexactRoot


def longest_prefix(items, predicate):
    """
    Return the length of the longest prefix of items satisfying
    predicate, assuming the predicate holds for the empty prefix and
    fails for every extension of a failing prefix (as membership in a
    hereditary family does).

    >>> longest_prefix((2, 3, 4, 5), lambda prefix: len(prefix) <= 2)
    2
    >>> longest_prefix((), lambda prefix: False)
    0
    >>> longest_prefix(range(100), lambda prefix: sum(prefix) < 50)
    10
    """
    # gallop first; blocks are usually short next to what remains
    low, high, step = 0, len(items), 1
    while low < high:
        cut = min(low + step, high)
        if not predicate(items[:cut]):
            high = cut - 1
            break
        low, step = cut, step * 2
    while low < high:
        mid = (low + high + 1) // 2
        if predicate(items[:mid]):
            low = mid
        else:
            high = mid - 1
    return low


def integer_root(value, p):
    """
    Return the floor of the p-th root of a non-negative integer.

    >>> integer_root(27, 3)
    3
    >>> integer_root(28, 3)
    3
    >>> integer_root(10**40, 2)
    100000000000000000000
    """
    if value < 2:
        return value
    guess = 1 << -(-value.bit_length() // p)
    while True:
        better = ((p - 1) * guess + value // guess ** (p - 1)) // p
        if better >= guess:
            return guess
        guess = better


def rational_root(value, p):
    """
    Return the exact p-th root of a non-negative rational.

    >>> rational_root(fractions.Fraction(9, 25), 2)
    Fraction(3, 5)
    >>> rational_root(fractions.Fraction(1, 2), 2)  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    InexactRoot: weight has no rational p-th root
    """
    value = fractions.Fraction(value)
    num = integer_root(value.numerator, p)
    den = integer_root(value.denominator, p)
    if num**p != value.numerator or den**p != value.denominator:
        raise InexactRoot(value=str(value), p=p)
    return fractions.Fraction(num, den)


def unit_coordinates(count):
    """
    Return ``count`` nonzero rationals whose squares sum to 1.

    Coordinates are split breadth-first along the 3-4-5 triangle so
    denominators grow with the logarithm of count.

    >>> unit_coordinates(2)
    [Fraction(3, 5), Fraction(4, 5)]
    >>> coords = unit_coordinates(7)
    >>> sum(c * c for c in coords), all(coords)
    (Fraction(1, 1), True)
    """
    if not count:
        return []
    three, four = fractions.Fraction(3, 5), fractions.Fraction(4, 5)
    queue = collections.deque([fractions.Fraction(1)])
    while len(queue) < count:
        coord = queue.popleft()
        queue.extend((coord * three, coord * four))
    return list(queue)


def parse_indices(spec):
    """
    Parse a comma separated list of integers or any iterable of ints.

    >>> parse_indices('2, 3,5')
    [2, 3, 5]
    >>> parse_indices(7)
    [7]
    >>> parse_indices('')
    []
    """
    if isinstance(spec, str):
        return [int(item) for item in spec.split(',') if item.strip()]
    return [int(item) for item in always_iterable(spec)]
