"""
schreier.spaces.tingley

Checks on tabulated maps between unit spheres, and generators for the
test vectors the rigidity argument builds along the way.

Synopsis

    A surjective isometry of the unit sphere of these spaces is the
    restriction of a diagonal sign map. A :class:`MapTable` records
    finitely many pairs (x, T(x)); the checks here confirm the observed
    trace is consistent with that, or point at the pairs where it is
    not::

        >>> from schreier.spaces.norms import Exact
        >>> from schreier.spaces.ordinals import Ordinal
        >>> theta = SignSeq([1, -1, 1])
        >>> xs = [Vector.basis(1), Vector.basis(2), Vector({2: '3/5', 3: '4/5'})]
        >>> table = diagonal_table(theta, xs, Ordinal(0, 1), Exact(2))
        >>> verify_isometry(table).ok
        True
        >>> extract_signs(table, 2)
        SignSeq([1, -1])

Description

    Only finite traces are ever checked, so a passing report is
    evidence, not a certificate. Witness generators validate their
    output with exact norms before returning it.
"""

import dataclasses
import fractions
import itertools
import json
import logging
import typing

import mpmath
import more_itertools

from . import config
from .errors import (
    ConstructionFailed,
    ExcludedInput,
    IsPlusMinusE1,
    MissingBasisPair,
    NotAMember,
    NotDiagonal,
    NotOnSphere,
    UnsupportedOrder,
    WeightsNotNormalized,
)
from .families import FinSet, complete_to_maximal, is_member
from .norms import Exact, Exponent, attains_full_mass, distance, is_on_sphere, norm, norming_sets
from .one_sets import require_sphere
from .ordinals import Ordinal
from .util import rational_root, unit_coordinates
from .vectors import SignSeq, Vector

log = logging.getLogger(__name__)


def _text(value):
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, 20)
    return str(value)


@dataclasses.dataclass(frozen=True)
class Violation:
    """
    Where a check failed, the two sides compared and how far apart
    they are.
    """

    location: typing.Any
    lhs: typing.Any
    rhs: typing.Any
    deficit: typing.Any = None

    def as_json(self):
        location = self.location
        if isinstance(location, tuple):
            location = list(location)
        return dict(
            location=location,
            lhs=_text(self.lhs),
            rhs=_text(self.rhs),
            deficit=None if self.deficit is None else _text(self.deficit),
        )


@dataclasses.dataclass
class VerificationReport:
    violations: typing.List[Violation] = dataclasses.field(default_factory=list)
    cases: int = 0
    vacuous: bool = False
    witnesses: typing.List[FinSet] = dataclasses.field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, location, lhs, rhs, deficit=None):
        self.violations.append(Violation(location, lhs, rhs, deficit))

    @classmethod
    def merge(cls, reports):
        """
        Combine reports in the order given.

        >>> one = VerificationReport(cases=2)
        >>> two = VerificationReport(cases=1)
        >>> two.add(3, '1', '2')
        >>> merged = VerificationReport.merge([one, two])
        >>> merged.ok, merged.cases
        (False, 3)
        """
        reports = list(reports)
        return cls(
            violations=list(
                itertools.chain.from_iterable(report.violations for report in reports)
            ),
            cases=sum(report.cases for report in reports),
            vacuous=all(report.vacuous for report in reports),
        )

    def as_json(self):
        data = dict(
            ok=self.ok,
            cases=self.cases,
            vacuous=self.vacuous,
            violations=[violation.as_json() for violation in self.violations],
        )
        if self.witnesses:
            data.update(witnesses=[F.as_json() for F in self.witnesses])
        return data


class MapTable:
    """
    Finitely many pairs (x, T(x)) of a map between unit spheres of
    X_{S_α,p}. Every entry must lie on the sphere and the inputs must
    be distinct.
    """

    def __init__(self, pairs, alpha, p, budget=None):
        self.pairs = [(Vector(x), Vector(y)) for x, y in pairs]
        self.alpha = Ordinal.parse(alpha)
        self.exponent = Exponent.parse(p)
        self.validate(budget)

    def validate(self, budget=None):
        offending = [
            dict(index=index, side=side)
            for index, pair in enumerate(self.pairs)
            for side, vector in zip(('input', 'output'), pair)
            if not is_on_sphere(vector, self.alpha, self.exponent, budget)
        ]
        if offending:
            raise NotOnSphere(entries=offending, alpha=str(self.alpha))
        duplicates = [
            x.as_json() for x in more_itertools.duplicates_everseen(x for x, _ in self.pairs)
        ]
        if duplicates:
            raise ValueError(f"Map table inputs must be distinct: {duplicates}")

    @classmethod
    def from_json(cls, text, budget=None):
        """
        >>> table = MapTable.from_json(
        ...     '{"alpha": "1", "p": {"exact": 2}, "pairs": [[{"2": "1"}, {"2": "-1"}]]}'
        ... )
        >>> table.image(Vector.basis(2))
        Vector({2: '-1'})
        """
        data = json.loads(text) if isinstance(text, str) else text
        pairs = [
            (Vector.from_json(x), Vector.from_json(y)) for x, y in data.get('pairs', [])
        ]
        return cls(pairs, data['alpha'], data['p'], budget)

    def as_json(self):
        return dict(
            alpha=str(self.alpha),
            p=self.exponent.as_json(),
            pairs=[[x.as_json(), y.as_json()] for x, y in self.pairs],
        )

    def inverse(self, budget=None):
        """
        The table of T^{-1}: outputs become inputs.
        """
        return MapTable(
            [(y, x) for x, y in self.pairs], self.alpha, self.exponent, budget
        )

    def image(self, x):
        return dict(self.pairs).get(x)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def diagonal_table(theta, xs, alpha, p, budget=None):
    """
    Tabulate the diagonal map of θ on the sphere vectors xs.

    Each basis vector e_i among xs also brings θ_i e_i, appended after
    xs, so the inverse table holds the pair (e_i, θ_i e_i).

    >>> from schreier.spaces.norms import Exact
    >>> theta = SignSeq([1, -1])
    >>> table = diagonal_table(theta, [Vector.basis(1), Vector.basis(2)], '1', Exact(1))
    >>> table.image(Vector({2: '-1'}))
    Vector({2: '1'})
    >>> extract_signs(table.inverse(), 2)
    SignSeq([1, -1])
    """
    inputs = list(xs)
    reflected = (theta.apply(x) for x in xs if _basis_index(x))
    inputs.extend(y for y in dict.fromkeys(reflected) if y not in inputs)
    return MapTable([(x, theta.apply(x)) for x in inputs], alpha, p, budget)


def _basis_index(x):
    """
    The index i when x is e_i, else None.
    """
    if len(x.support) == 1 and x[x.support.minimum] == 1:
        return x.support.minimum
    return None


def verify_isometry(table, budget=None):
    """
    Compare ‖x - x'‖ with ‖T(x) - T(x')‖ over every pair of entries.
    """
    report = VerificationReport()
    entries = list(enumerate(table.pairs))
    for (a, (x1, y1)), (b, (x2, y2)) in itertools.combinations(entries, 2):
        before = distance(x1, x2, table.alpha, table.exponent, budget)
        after = distance(y1, y2, table.alpha, table.exponent, budget)
        report.cases += 1
        if not before.is_close(after):
            report.add(
                (a, b), before.pth_power, after.pth_power, before.pth_power - after.pth_power
            )
    report.vacuous = not report.cases
    return report


def extract_signs(table, N):
    """
    Read θ_1..θ_N off the images of the basis vectors.

    >>> from schreier.spaces.norms import Exact
    >>> bad = MapTable([(Vector.basis(2), Vector.basis(3))], '1', Exact(1))
    >>> extract_signs(bad, 2)  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    MissingBasisPair: table has no entry for a basis vector
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    images = dict(table.pairs)
    signs = []
    for index in range(1, N + 1):
        basis = Vector.basis(index)
        image = images.get(basis)
        if image is None:
            raise MissingBasisPair(i=index)
        if image == basis:
            signs.append(1)
        elif image == -basis:
            signs.append(-1)
        else:
            raise NotDiagonal(i=index, image=image.as_json())
    return SignSeq(signs)


def verify_diagonal(table, theta):
    """
    Check T(x)(i) = θ_i x(i) for every entry and every coordinate where
    either side is nonzero. A coordinate of T(x) outside supp(x) is
    reported too, since θ_i x(i) vanishes there whatever θ_i is.
    """
    report = VerificationReport()
    for position, (x, y) in enumerate(table.pairs):
        expected = theta.apply(x)
        report.cases += 1
        for index in sorted(set(x) | set(y)):
            if y[index] != expected[index]:
                report.add((position, index), y[index], expected[index], y[index] - expected[index])
    report.vacuous = not report.cases
    return report


def _plus_minus_e1(u):
    return u in (Vector.basis(1), -Vector.basis(1))


def _require_order(alpha, least):
    if alpha < least:
        raise UnsupportedOrder(alpha=str(alpha), minimum=str(least))


def check_l1(x, n, alpha, p, budget=None):
    """
    Evaluate ‖x + e_n‖ = 2 ⟺ x(n) = 1 on one instance.

    The equivalence holds for p > 1. At p = 1 the truth value is only
    reported, and may well be false.

    >>> from schreier.spaces.norms import Exact
    >>> check_l1(Vector.basis(5), 5, Ordinal(0, 1), Exact(2))
    True
    >>> check_l1(Vector({2: '1/2', 3: '1/2'}), 2, Ordinal(0, 1), Exact(1))
    False
    """
    exponent = Exponent.parse(p)
    require_sphere(x, alpha, exponent, budget)
    reaches_two = norm(x + Vector.basis(n), alpha, exponent, budget).is_close(
        exponent.power(2)
    )
    return reaches_two == (x[n] == 1)


def l3_witness(u, alpha, p, budget=None):
    """
    Find x on the sphere with min{‖u + x‖, ‖u - x‖} > 1.

    >>> from schreier.spaces.norms import Exact
    >>> l3_witness(Vector({2: '3/5', 3: '4/5'}), Ordinal(0, 1), Exact(2))
    Vector({4: '1'})
    >>> l3_witness(Vector.basis(7), Ordinal(0, 2), Exact(3))
    Vector({2: '1'})
    """
    exponent = Exponent.parse(p)
    if _plus_minus_e1(u):
        raise IsPlusMinusE1(vector=u.as_json())
    _require_order(alpha, Ordinal(0, 1))
    require_sphere(u, alpha, exponent, budget)
    last = max(u.support.maximum, 1) + 1
    j = more_itertools.first((index for index in range(2, last + 1) if not u[index]), None)
    if j is None:
        # u(j) ≠ 0 for every j ⩾ 2 needs an infinite support
        raise AssertionError("unreachable: finitely supported u vanishes past its support")
    x = Vector.basis(j)
    for candidate in (u + x, u - x):
        value = norm(candidate, alpha, exponent, budget)
        if not exponent.less(exponent.one, value.pth_power):
            raise ConstructionFailed(
                "witness does not separate from the unit ball",
                vector=u.as_json(),
                witness=x.as_json(),
            )
    return x


def check_l3(u, x, alpha, p, budget=None):
    """
    For u = ±e_1 and any sphere vector x, min{‖u + x‖, ‖u - x‖} ⩽ 1.
    Any other u passes vacuously.
    """
    exponent = Exponent.parse(p)
    require_sphere(x, alpha, exponent, budget)
    if not _plus_minus_e1(u):
        return True
    smaller = min(
        norm(u + x, alpha, exponent, budget).pth_power,
        norm(u - x, alpha, exponent, budget).pth_power,
    )
    return not exponent.less(exponent.one, smaller)


def _coordinates(weights, exponent):
    """
    Return |a_k| with |a_k|^p = weights[k], exact where p is an integer.
    """
    if isinstance(exponent, Exact):
        return [rational_root(weight, exponent.p) for weight in weights]
    with exponent.context():
        roots = (exponent.root(mpmath.mpf(w.numerator) / w.denominator) for w in weights)
        return [_as_fraction(root) for root in roots]


def _as_fraction(value):
    mantissa, exp = value.man_exp
    return fractions.Fraction(mantissa) * fractions.Fraction(2) ** exp


def check_imp_identity(indices, weights, signs, l, alpha, p, budget=None):
    """
    With x(i_k) = signs[k] |a_k| and |a_k|^p = weights[k], and ε the
    sign of x(i_l), check

        ‖x + ε e_{i_l}‖^p = 1 - |a_l|^p + (1 + |a_l|)^p

    >>> from schreier.spaces.norms import Exact
    >>> check_imp_identity(
    ...     FinSet([2, 3]), ['9/25', '16/25'], [1, 1], 1, Ordinal(0, 1), Exact(2))
    True
    """
    exponent = Exponent.parse(p)
    indices = FinSet(indices)
    weights = [fractions.Fraction(weight) for weight in weights]
    signs = SignSeq(signs)
    if not len(indices) == len(weights) == len(signs):
        raise ValueError("indices, weights and signs must have the same length")
    if not 1 <= l <= len(indices):
        raise ValueError(f"Position l must lie in 1..{len(indices)}, got {l}")
    if not is_member(indices, alpha):
        raise NotAMember(set=indices.as_json(), alpha=str(alpha))
    if any(weight <= 0 for weight in weights) or sum(weights) != 1:
        raise WeightsNotNormalized(weights=[str(weight) for weight in weights])
    coords = _coordinates(weights, exponent)
    x = Vector(
        {index: signs[k] * coord for k, (index, coord) in enumerate(zip(indices, coords), 1)}
    )
    epsilon = signs[l]
    target = indices[l - 1]
    with exponent.context():
        lhs = norm(x + epsilon * Vector.basis(target), alpha, exponent, budget).pth_power
        a_l = abs(x[target])
        rhs = (
            sum((exponent.weight(value) for value in x.values()), exponent.zero)
            - exponent.weight(a_l)
            + exponent.weight(1 + a_l)
        )
        return exponent.close(lhs, rhs)


def check_fact1(x, i, alpha, budget=None):
    """
    At p = 2, if ‖e_i + x‖ > 1 and ‖e_i - x‖ > 1 then
    ‖e_i + x‖² + ‖e_i - x‖² ⩽ 4.

    >>> check_fact1(Vector({2: '3/5', 3: '4/5'}), 2, Ordinal(0, 1))
    True
    """
    if i < 2:
        raise ValueError(f"Index must be at least 2, got {i}")
    two = Exact(2)
    require_sphere(x, alpha, two, budget)
    plus = norm(Vector.basis(i) + x, alpha, two, budget).pth_power
    minus = norm(Vector.basis(i) - x, alpha, two, budget).pth_power
    if plus <= 1 or minus <= 1:
        return True
    return plus + minus <= 4


def fact4_witness(i, j, alpha, budget=None):
    """
    At p = 2, find x on the sphere with ‖x ± e_i‖² = 2 and
    ‖x ± e_j‖² < 2, for i > j ⩾ 2.

    The support of x is F minus i, where F = {i, i+2, ..., i+m} is the
    maximal completion of {i, i+2}. Adding e_j never reaches the full
    mass: were {j} together with F minus i admissible, then so would be
    F with i+1 added, and F is maximal.

    >>> fact4_witness(3, 2, Ordinal(0, 1))
    Vector({5: '3/5', 6: '4/5'})
    """
    if not i > j >= 2:
        raise ValueError(f"Need i > j >= 2, got i={i}, j={j}")
    start = FinSet([i, i + 2])
    if not is_member(start, alpha):
        raise ConstructionFailed(
            "no maximal set of the shape {i, i+2, ...}", i=i, alpha=str(alpha)
        )
    try:
        F = complete_to_maximal(start, alpha, budget)
    except ConstructionFailed as exc:
        raise ConstructionFailed(str(exc), i=i, j=j, **exc.details) from exc
    log.debug("Completed {%d, %d} to a maximal set of size %d in S_%s", i, i + 2, len(F), alpha)
    x = Vector(zip(F[1:], unit_coordinates(len(F) - 1)))
    _validate_fact4(x, i, j, alpha, budget)
    return x


def _validate_fact4(x, i, j, alpha, budget):
    two = Exact(2)
    limit = config.resolve(budget).support
    failures = []
    if norm(x, alpha, two, budget).pth_power != 1:
        failures.append('sphere')
    for sign in (1, -1):
        if norm(x + sign * Vector.basis(i), alpha, two, budget).pth_power != 2:
            failures.append(f'{sign:+d}e_i')
        shifted = x + sign * Vector.basis(j)
        if attains_full_mass(shifted, alpha):
            failures.append(f'{sign:+d}e_j')
        elif len(shifted.support) <= limit:
            if norm(shifted, alpha, two, budget).pth_power >= 2:
                failures.append(f'{sign:+d}e_j')
    if failures:
        raise ConstructionFailed(
            "witness failed validation", i=i, j=j, alpha=str(alpha), failed=failures
        )


def check_lemma7(x, n, alpha, budget=None):
    """
    At p = 1 and n ⩾ 2, ‖e_n + x‖ + ‖e_n - x‖ = 2 ⟺ x = ±e_n.

    >>> check_lemma7(Vector({2: '1/2', 3: '1/2'}), 4, Ordinal(0, 1))
    True
    """
    if n < 2:
        raise ValueError(f"Index must be at least 2, got {n}")
    if _plus_minus_e1(x):
        raise ExcludedInput(vector=x.as_json())
    _require_order(alpha, Ordinal(0, 1))
    require_sphere(x, alpha, budget=budget)
    basis = Vector.basis(n)
    total = (
        norm(basis + x, alpha, Exact(1), budget).pth_power
        + norm(basis - x, alpha, Exact(1), budget).pth_power
    )
    return (total == 2) == (x in (basis, -basis))


def _reaches_two(vector, alpha, budget):
    return norm(vector, alpha, Exact(1), budget).pth_power == 2


def check_lemma20(x, i, j, alpha, budget=None):
    """
    At p = 1 and 2 ⩽ i < j: if ‖x + e_i‖ = ‖x - e_i‖ = 2 then
    ‖x + e_j‖ = 2 or ‖x - e_j‖ = 2. True when the hypothesis fails.

    >>> check_lemma20(Vector.basis(2), 3, 4, Ordinal(0, 1))
    True
    """
    if not 2 <= i < j:
        raise ValueError(f"Need 2 <= i < j, got i={i}, j={j}")
    _require_order(alpha, Ordinal(0, 1))
    require_sphere(x, alpha, budget=budget)
    e_i, e_j = Vector.basis(i), Vector.basis(j)
    if not (_reaches_two(x + e_i, alpha, budget) and _reaches_two(x - e_i, alpha, budget)):
        return True
    return _reaches_two(x + e_j, alpha, budget) or _reaches_two(x - e_j, alpha, budget)


def check_lemma23(x, i, j, alpha, budget=None):
    """
    At p = 1, α ⩾ 2, distinct i, j ⩾ 2 and x(1) = 0:

        ‖x + e_i‖ = ‖x + e_j‖ = 2 and ‖x - e_i‖ = ‖x - e_j‖ = 1
        ⟺ x = ½e_i + ½e_j

    >>> check_lemma23(Vector({2: '1/2', 3: '1/2'}), 2, 5, Ordinal(0, 2))
    True
    """
    if i == j or min(i, j) < 2:
        raise ValueError(f"Need distinct i, j >= 2, got i={i}, j={j}")
    _require_order(alpha, Ordinal(0, 2))
    if x[1]:
        raise ExcludedInput("x must vanish at 1", vector=x.as_json())
    require_sphere(x, alpha, budget=budget)
    e_i, e_j = Vector.basis(i), Vector.basis(j)

    def value(vector):
        return norm(vector, alpha, Exact(1), budget).pth_power

    conditions = (
        value(x + e_i) == 2
        and value(x + e_j) == 2
        and value(x - e_i) == 1
        and value(x - e_j) == 1
    )
    half = fractions.Fraction(1, 2)
    return conditions == (x == half * e_i + half * e_j)


def check_lemma1_p1(x, y, alpha, budget=None):
    """
    At p = 1, when ‖x + y‖ = 2 every set F attaining it is a 1-set
    carrier for both x and y, and x, y agree in sign on
    supp(x) ∩ supp(y) ∩ F.

    >>> report = check_lemma1_p1(Vector.basis(4), Vector({4: '1/2', 5: '1/2'}), Ordinal(0, 1))
    >>> report.ok, report.witnesses
    (True, [FinSet([4, 5])])
    """
    require_sphere(x, alpha, budget=budget)
    require_sphere(y, alpha, budget=budget)
    report = VerificationReport()
    total = x + y
    if norm(total, alpha, Exact(1), budget).pth_power != 2:
        report.vacuous = True
        return report
    for F in norming_sets(total, alpha, Exact(1), budget):
        report.cases += 1
        report.witnesses.append(F)
        for name, vector in (('x', x), ('y', y)):
            mass = sum(abs(vector[index]) for index in F)
            if mass != 1:
                report.add(dict(set=F.as_json(), vector=name), mass, 1, 1 - mass)
        for index in F:
            if x[index] and y[index] and (x[index] > 0) != (y[index] > 0):
                report.add(dict(set=F.as_json(), index=index), x[index], y[index])
    return report
