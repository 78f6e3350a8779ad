"""
schreier.spaces.properties

Named, seeded sweeps over the invariants of the families, the norm and
the sphere maps. Each sweep is a :class:`Suite`: it draws its cases
from a :class:`random.Random` and checks them one at a time, so the
cases may be spread over a process pool and still merge in order.

Synopsis::

    >>> report = run('goodness')
    >>> report.ok, report.cases
    (True, 2)
    >>> 'membership-oracle' in SUITES
    True

The samplers build vectors on the unit sphere with exact coordinates:
at p = 1 by normalizing, at p = 2 by splitting along rational points
of the circle, at p = 3 from sums of three rational cubes equal to 1.
"""

import concurrent.futures
import fractions
import inspect
import itertools
import logging
import random

import more_itertools

from .errors import SchreierError
from .families import (
    FinSet,
    check_good_sequence,
    decompose_maximal,
    enumerate_maximal,
    is_maximal,
    is_member,
    members_within,
)
from .norms import Approx, Exact, Exponent, distance, is_on_sphere, norm, norming_sets
from .one_sets import gap, nonmaximal_one_set, one_sets
from .oracle import member_bruteforce, norm_bruteforce
from .ordinals import Ordinal, Successor, approximant, classify
from .tingley import (
    MapTable,
    VerificationReport,
    Violation,
    check_fact1,
    check_imp_identity,
    check_l1,
    check_lemma1_p1,
    check_lemma7,
    check_lemma20,
    check_lemma23,
    diagonal_table,
    extract_signs,
    fact4_witness,
    l3_witness,
    verify_diagonal,
    verify_isometry,
)
from .vectors import SignSeq, Vector

log = logging.getLogger(__name__)

Fraction = fractions.Fraction

CUBES = (
    (Fraction(1),),
    (Fraction(1, 2), Fraction(2, 3), Fraction(5, 6)),
    (Fraction(1, 9), Fraction(2, 3), Fraction(8, 9)),
)
"Rationals whose cubes sum to 1"


def ordinals(*specs):
    return tuple(map(Ordinal.parse, specs))


def random_fraction(rng, bound=20):
    numerator = rng.choice([n for n in range(-bound, bound + 1) if n])
    return Fraction(numerator, rng.randint(1, bound))


def random_vector(rng, size=10, bound=20, low=1):
    """
    A nonzero vector supported in {low..size}, with numerators and
    denominators bounded by ``bound``.
    """
    indices = range(low, size + 1)
    chosen = rng.sample(indices, rng.randint(1, len(indices)))
    return Vector({index: random_fraction(rng, bound) for index in chosen})


def random_signs(rng, length):
    return SignSeq(rng.choice((1, -1)) for _ in range(length))


def unit_block(rng, p):
    """
    Nonzero rationals whose p-th powers sum to 1.

    >>> rng = random.Random(3)
    >>> all(sum(c**p for c in unit_block(rng, p)) == 1 for p in (1, 2, 3, 4))
    True
    """
    if p == 1:
        parts = [rng.randint(1, 9) for _ in range(rng.randint(1, 4))]
        return [Fraction(part, sum(parts)) for part in parts]
    if p == 2:
        coords = [Fraction(1)]
        for _ in range(rng.randint(0, 3)):
            coord = coords.pop(rng.randrange(len(coords)))
            t = Fraction(rng.randint(1, 8), 9)
            coords += [coord * (1 - t * t) / (1 + t * t), coord * 2 * t / (1 + t * t)]
        return coords
    if p == 3:
        return list(rng.choice(CUBES))
    return [Fraction(1)]


def admissible_block(rng, alpha, count, size=10, low=1, attempts=100):
    """
    A random member of S_α with ``count`` elements in {low..size}, or
    None when none turns up.
    """
    indices = range(low, size + 1)
    if count > len(indices):
        return None
    for _ in range(attempts):
        block = FinSet(sorted(rng.sample(indices, count)))
        if is_member(block, alpha):
            return block
    return None


def sphere_vector(rng, alpha, p, size=10, low=1):
    """
    A vector on the unit sphere of X_{S_α,p} supported in {low..size}.

    >>> rng = random.Random(0)
    >>> alpha = Ordinal(0, 1)
    >>> all(is_on_sphere(sphere_vector(rng, alpha, Exact(2)), alpha, Exact(2)) for _ in range(5))
    True
    """
    exponent = Exponent.parse(p)
    if exponent == Exact(1):
        vector = random_vector(rng, size, low=low)
        return vector * (1 / norm(vector, alpha, exponent).pth_power)
    coords = unit_block(rng, exponent.p) if isinstance(exponent, Exact) else [Fraction(1)]
    block = admissible_block(rng, alpha, len(coords), size, low)
    if block is None:
        coords, block = [Fraction(1)], FinSet([rng.randint(low, size)])
    coords = rng.sample(coords, len(coords))
    x = Vector({
        index: rng.choice((1, -1)) * coord for index, coord in zip(block, coords)
    })
    for index in rng.sample(range(low, size + 1), rng.randint(0, 3)):
        if index in x:
            continue
        candidate = x + Vector({index: random_fraction(rng) / 4})
        if is_on_sphere(candidate, alpha, exponent):
            x = candidate
    return x


class Suite:
    """
    Base for a named property sweep.

    Subclasses set ``name``, draw cases in :meth:`cases` and yield a
    :class:`Violation` from :meth:`check` for every failure. Sizes are
    class attributes, overridable per instance with a mapping.
    """

    name = None
    count = 0

    oracle = False
    "Whether the cases compare a fast engine with the brute-force oracle"

    def __init__(self, config=None):
        if config is None:
            config = {}
        if self.__class__ is Suite:
            raise NotImplementedError("Suite is an abstract base class")
        self.load_config(config)

    def load_config(self, config):
        self.__dict__.update(config)

    @property
    def description(self):
        return inspect.getdoc(self).splitlines()[0]

    def cases(self, rng):
        raise NotImplementedError

    def check(self, case):
        raise NotImplementedError

    def evaluate(self, case):
        try:
            return list(self.check(case))
        except SchreierError as exc:
            return [Violation(exc.code, str(exc), 'no error')]


class MembershipOracle(Suite):
    """
    Fast membership agrees with the literal recursion on every subset.
    """

    name = 'membership-oracle'
    oracle = True
    size = 12
    orders = ordinals('0', '1', '2', '3', 'w', 'w+1', 'w+2')

    def cases(self, rng):
        universe = range(1, self.size + 1)
        for alpha in self.orders:
            for F in more_itertools.powerset(universe):
                yield alpha, FinSet(F)

    def check(self, case):
        alpha, F = case
        fast, slow = is_member(F, alpha), member_bruteforce(F, alpha)
        if fast != slow:
            yield Violation(dict(set=F.as_json(), alpha=str(alpha)), fast, slow)


class S1ClosedForm(Suite):
    """
    F ∈ S_1 exactly when F is empty or |F| ⩽ min F.
    """

    name = 's1-closed-form'
    size = 16

    def cases(self, rng):
        return map(FinSet, more_itertools.powerset(range(1, self.size + 1)))

    def check(self, F):
        expected = not F or len(F) <= F.minimum
        if is_member(F, Ordinal(0, 1)) != expected:
            yield Violation(F.as_json(), not expected, expected)


class Structure(Suite):
    """
    Heredity, spreading, monotonicity, the singleton and pair rules and
    the extension facts hold on every member of a finite universe.
    """

    name = 'structure'
    size = 12
    orders = ordinals('0', '1', '2', '3', 'w', 'w+1')

    def cases(self, rng):
        for alpha in self.orders:
            for F in members_within(range(1, self.size + 1), alpha):
                yield alpha, F

    def check(self, case):
        alpha, F = case

        def expect(rule, G, target=alpha):
            if not is_member(G, target):
                return Violation(dict(rule=rule, set=F.as_json(), alpha=str(alpha)), G.as_json(), True)

        found = []
        for position in range(len(F)):
            found.append(expect('heredity', FinSet(F[:position] + F[position + 1 :])))
            moved = F[position] + 1
            if position + 1 == len(F) or F[position + 1] > moved:
                spread = F[:position] + (moved,) + F[position + 1 :]
                found.append(expect('spreading', FinSet(spread)))
            found.append(expect('singleton', FinSet([F[position]])))
        found.append(expect('monotonicity', F, alpha.successor()))
        if not alpha.is_zero:
            pairs = itertools.combinations((index for index in F if index >= 2), 2)
            found.extend(expect('pair', FinSet(pair)) for pair in pairs)
        if F and not is_maximal(F, alpha):
            found.extend(
                expect('extension', F.union([extra]))
                for extra in range(F.maximum + 1, F.maximum + 5)
            )
        if len(F) >= 2:
            rest = F[1:]
            between = range(F[0] + 1, rest[0])
            found.extend(
                expect('insertion', FinSet(pair + rest))
                for pair in itertools.combinations(between, 2)
            )
        return filter(None, found)


class Decompose(Suite):
    """
    Maximal sets of a successor family split into maximal blocks of its
    predecessor, as many as the first block's minimum.
    """

    name = 'decompose'
    size = 14
    orders = ordinals('2', '3')

    def cases(self, rng):
        for alpha in self.orders:
            for G in enumerate_maximal(alpha, self.size):
                yield alpha, G

    def check(self, case):
        alpha, G = case
        blocks = decompose_maximal(G, alpha)
        location = dict(set=G.as_json(), alpha=str(alpha))
        joined = FinSet(itertools.chain.from_iterable(blocks))
        if joined != G:
            yield Violation(location, joined.as_json(), G.as_json())
        if len(blocks) != blocks[0].minimum:
            yield Violation(location, len(blocks), blocks[0].minimum)
        for block in blocks:
            if not is_maximal(block, alpha.predecessor):
                yield Violation(location, block.as_json(), 'maximal')


class NormOracle(Suite):
    """
    The searching norm agrees with the exhaustive one.
    """

    name = 'norm-oracle'
    oracle = True
    count = 500
    size = 10
    orders = ordinals('1', '2', 'w')
    exponents = (Exact(1), Exact(2), Exact(3))

    def cases(self, rng):
        for _ in range(self.count):
            yield (
                random_vector(rng, self.size),
                rng.choice(self.orders),
                rng.choice(self.exponents),
            )

    def check(self, case):
        x, alpha, exponent = case
        fast = norm(x, alpha, exponent)
        slow = norm_bruteforce(x, alpha, exponent)
        if fast != slow:
            yield Violation(
                dict(vector=x.as_json(), alpha=str(alpha), p=exponent.label()),
                fast.pth_power,
                slow.pth_power,
            )


class Attainment(Suite):
    """
    Sphere vectors are normed by sets whose p-th power sum is exactly 1.
    """

    name = 'attainment'
    count = 300
    orders = ordinals('1', '2', 'w')
    exponents = (Exact(1), Exact(2), Exact(3))

    def cases(self, rng):
        for _ in range(self.count):
            alpha, exponent = rng.choice(self.orders), rng.choice(self.exponents)
            yield sphere_vector(rng, alpha, exponent), alpha, exponent

    def check(self, case):
        x, alpha, exponent = case
        location = dict(vector=x.as_json(), alpha=str(alpha), p=exponent.label())
        sets = norming_sets(x, alpha, exponent)
        if not sets or sets == [FinSet()]:
            yield Violation(location, 'no norming set', 'a norming set')
        for F in sets:
            mass = sum(exponent.weight(x[index]) for index in F)
            if mass != 1:
                yield Violation(dict(location, set=F.as_json()), mass, 1, 1 - mass)


class Diagonal(Suite):
    """
    Diagonal sign maps preserve distances.
    """

    name = 'diagonal'
    count = 1000
    size = 10
    orders = ordinals('1', '2', 'w')
    exponents = (Exact(1), Exact(2), Exact(3), Approx('1.5'))

    def cases(self, rng):
        for _ in range(self.count):
            yield (
                random_signs(rng, self.size),
                random_vector(rng, self.size),
                random_vector(rng, self.size),
                rng.choice(self.orders),
                rng.choice(self.exponents),
            )

    def check(self, case):
        theta, x, y, alpha, exponent = case
        before = distance(x, y, alpha, exponent)
        after = distance(theta.apply(x), theta.apply(y), alpha, exponent)
        if not before.is_close(after):
            yield Violation(
                dict(x=x.as_json(), y=y.as_json(), signs=theta.as_json()),
                before.pth_power,
                after.pth_power,
            )


class L1(Suite):
    """
    For p > 1, ‖x + e_n‖ = 2 exactly when x(n) = 1; at p = 1 it fails
    for ½e_2 + ½e_3 and n = 2.
    """

    name = 'l1'
    count = 500
    size = 10
    orders = ordinals('1', '2')
    exponents = (Exact(2), Exact(3))

    def cases(self, rng):
        yield Vector({2: '1/2', 3: '1/2'}), 2, Ordinal(0, 1), Exact(1), False
        for _ in range(self.count):
            alpha, exponent = rng.choice(self.orders), rng.choice(self.exponents)
            x = sphere_vector(rng, alpha, exponent, self.size)
            n = rng.choice(list(x.support) + [rng.randint(1, self.size)])
            yield x, n, alpha, exponent, True

    def check(self, case):
        x, n, alpha, exponent, expected = case
        if check_l1(x, n, alpha, exponent) != expected:
            yield Violation(dict(vector=x.as_json(), n=n, p=exponent.label()), not expected, expected)


class Imp(Suite):
    """
    ‖x + εe_{i_l}‖^p = 1 - |a_l|^p + (1 + |a_l|)^p.
    """

    name = 'imp'
    count = 200
    size = 10
    orders = ordinals('1', '2')

    def cases(self, rng):
        for _ in range(self.count):
            alpha, p = rng.choice(self.orders), rng.choice((1, 2, 3))
            coords = unit_block(rng, p)
            indices = admissible_block(rng, alpha, len(coords), self.size)
            if indices is None:
                coords, indices = [Fraction(1)], FinSet([rng.randint(1, self.size)])
            weights = [coord**p for coord in coords]
            signs = random_signs(rng, len(weights))
            yield indices, weights, signs, rng.randint(1, len(weights)), alpha, Exact(p)

    def check(self, case):
        indices, weights, signs, l, alpha, exponent = case
        if not check_imp_identity(indices, weights, signs, l, alpha, exponent):
            yield Violation(dict(indices=indices.as_json(), l=l, p=exponent.label()), False, True)


class Fact1(Suite):
    """
    At p = 2, ‖e_i + x‖² + ‖e_i - x‖² ⩽ 4 when both norms exceed 1.
    """

    name = 'fact1'
    count = 300
    size = 10
    orders = ordinals('1', '2', 'w')

    def cases(self, rng):
        for _ in range(self.count):
            alpha = rng.choice(self.orders)
            yield sphere_vector(rng, alpha, Exact(2), self.size), rng.randint(2, self.size + 1), alpha

    def check(self, case):
        x, i, alpha = case
        if not check_fact1(x, i, alpha):
            yield Violation(dict(vector=x.as_json(), i=i, alpha=str(alpha)), False, True)


class Witnesses(Suite):
    """
    The separating vectors for u ≠ ±e_1 and the p = 2 witnesses for
    every 2 ⩽ j < i ⩽ 8 are found and validated.
    """

    name = 'witnesses'
    count = 200
    size = 10
    largest = 8
    orders = ordinals('1', '2')
    exponents = (Exact(2), Exact(3))

    def cases(self, rng):
        drawn = 0
        while drawn < self.count:
            alpha, exponent = rng.choice(self.orders), rng.choice(self.exponents)
            u = sphere_vector(rng, alpha, exponent, self.size)
            if u in (Vector.basis(1), -Vector.basis(1)):
                continue
            drawn += 1
            yield 'l3', u, alpha, exponent
        for alpha in self.orders:
            for i in range(3, self.largest + 1):
                for j in range(2, i):
                    yield 'fact4', i, j, alpha

    def check(self, case):
        kind, *args = case
        if kind == 'fact4':
            fact4_witness(*args)
            return
        u, alpha, exponent = args
        x = l3_witness(u, alpha, exponent)
        for candidate in (u + x, u - x):
            value = norm(candidate, alpha, exponent).pth_power
            if not value > 1:
                yield Violation(dict(vector=u.as_json(), witness=x.as_json()), value, '> 1')


class Tingley(Suite):
    """
    Planted diagonal maps give back their signs and pass both checks;
    flipping one coordinate of one image is always caught.
    """

    name = 'tingley'
    N = 10
    samples = 50
    corruptions = 100
    alpha = Ordinal(0, 1)
    exponent = Exact(2)

    def cases(self, rng):
        basis = [Vector.basis(index) for index in range(1, self.N + 1)]
        drawn = [
            sphere_vector(rng, self.alpha, self.exponent, self.N) for _ in range(self.samples)
        ]
        inputs = list(dict.fromkeys(basis + drawn))
        theta = random_signs(rng, self.N)
        yield 'round-trip', theta, inputs, None, None
        eligible = range(len(basis), len(inputs))
        for _ in range(self.corruptions):
            position = rng.choice(eligible)
            index = rng.choice(list(inputs[position].support))
            yield 'corrupt', theta, inputs, position, index

    def check(self, case):
        kind, theta, inputs, position, index = case
        table = diagonal_table(theta, inputs, self.alpha, self.exponent)
        if kind == 'round-trip':
            yield from self._round_trip(table, theta)
            return
        pairs = list(table.pairs)
        x, y = pairs[position]
        pairs[position] = x, y - 2 * y[index] * Vector.basis(index)
        corrupted = MapTable(pairs, self.alpha, self.exponent)
        if verify_diagonal(corrupted, theta).ok and verify_isometry(corrupted).ok:
            yield Violation(dict(position=position, index=index), 'undetected', 'detected')

    def _round_trip(self, table, theta):
        for label, found in (
            ('signs', extract_signs(table, self.N)),
            ('inverse signs', extract_signs(table.inverse(), self.N)),
        ):
            if found != theta:
                yield Violation(label, found.as_json(), theta.as_json())
        for label, report in (
            ('isometry', verify_isometry(table)),
            ('diagonal', verify_diagonal(table, theta)),
        ):
            if not report.ok:
                yield Violation(label, len(report.violations), 0)


class OneSets(Suite):
    """
    The p = 1 picture: 1-sets, gaps, the non-maximal 1-set of S_1 and
    the norm-two characterizations.
    """

    name = 'one-sets'
    count = 300
    instances = 200
    size = 10

    def cases(self, rng):
        one = Ordinal(0, 1)
        small = ordinals('1', '2')
        for _ in range(self.count):
            yield 'analysis', sphere_vector(rng, one, Exact(1), self.size)
        for _ in range(self.instances):
            alpha = rng.choice(small)
            n = rng.randint(2, self.size)
            if rng.random() < 0.25:
                x = rng.choice((1, -1)) * Vector.basis(n)
            else:
                x = sphere_vector(rng, alpha, Exact(1), self.size, low=2)
            yield 'lemma7', x, n, alpha
        for _ in range(self.instances):
            alpha = rng.choice(small)
            i, j = sorted(rng.sample(range(2, self.size + 1), 2))
            if rng.random() < 0.5:
                a, b = rng.sample([k for k in range(2, self.size + 1) if k != i], 2)
                x = Fraction(1, 2) * (Vector.basis(a) + Vector.basis(b))
                if not is_on_sphere(x, alpha, Exact(1)):
                    x = Vector.basis(a)
            else:
                x = sphere_vector(rng, alpha, Exact(1), self.size)
            yield 'lemma20', x, i, j, alpha
        for _ in range(self.instances):
            alpha = rng.choice(ordinals('2', 'w'))
            i, j = rng.sample(range(2, self.size + 1), 2)
            if rng.random() < 0.3:
                x = Fraction(1, 2) * (Vector.basis(i) + Vector.basis(j))
            else:
                x = sphere_vector(rng, alpha, Exact(1), self.size, low=2)
            yield 'lemma23', x, i, j, alpha
        for _ in range(self.instances):
            alpha = rng.choice(small)
            x = sphere_vector(rng, alpha, Exact(1), self.size)
            y = x if rng.random() < 0.3 else sphere_vector(rng, alpha, Exact(1), self.size)
            yield 'lemma1', x, y, alpha

    def check(self, case):
        kind, *args = case
        if kind == 'analysis':
            yield from self._analysis(*args)
            return
        location = dict(kind=kind, vector=args[0].as_json())
        if kind == 'lemma1':
            report = check_lemma1_p1(*args)
            if not report.ok:
                yield Violation(location, len(report.violations), 0)
            return
        check = dict(lemma7=check_lemma7, lemma20=check_lemma20, lemma23=check_lemma23)[kind]
        if not check(*args):
            yield Violation(location, False, True)

    def _analysis(self, x):
        alpha = Ordinal(0, 1)
        location = dict(vector=x.as_json())
        sets = one_sets(x, alpha)
        if not sets:
            yield Violation(location, 'no 1-set', 'a 1-set')
        for F in sets:
            if sum(abs(x[index]) for index in F) != 1 or not all(x[index] for index in F):
                yield Violation(dict(location, set=F.as_json()), 'not a 1-set', '1-set')
        margin = gap(x, alpha)
        if margin <= 0:
            yield Violation(location, margin, '> 0')
        for F in members_within(x.support, alpha):
            total = sum(abs(x[index]) for index in F)
            if total != 1 and total > 1 - margin:
                yield Violation(dict(location, set=F.as_json()), total, 1 - margin)
            if F and not is_maximal(F, alpha):
                for extra in range(F.minimum + 1, F.maximum + 3):
                    if extra not in F and not is_member(F.union([extra]), alpha):
                        yield Violation(dict(location, set=F.as_json()), extra, 'extends')
        # raises when the non-maximal 1-set is not a unique tail
        nonmaximal_one_set(x, alpha)


class Goodness(Suite):
    """
    Approximants are increasing successors and their predecessors
    index increasing families.
    """

    name = 'goodness'
    size = 12
    depth = 6
    orders = ordinals('w', 'w*2')

    def cases(self, rng):
        return iter(self.orders)

    def check(self, alpha):
        for n in range(1, self.depth + 1):
            current, following = approximant(alpha, n), approximant(alpha, n + 1)
            if not isinstance(classify(current), Successor):
                yield Violation(dict(alpha=str(alpha), n=n), str(current), 'successor')
            if not current < following < alpha:
                yield Violation(dict(alpha=str(alpha), n=n), str(current), str(following))
        for n, F in check_good_sequence(alpha, self.size, self.depth):
            yield Violation(dict(alpha=str(alpha), n=n), F.as_json(), 'member')


SUITES = {suite.name: suite for suite in Suite.__subclasses__()}


def describe(oracle=False):
    """
    Describe every suite, or only those checked against the
    brute-force oracle.
    """
    return {
        name: suite().description
        for name, suite in SUITES.items()
        if suite.oracle or not oracle
    }


ORACLE_SWEEPS = {
    'membership-oracle': dict(size=8),
    'norm-oracle': dict(count=50),
}
"Sizes of the oracle sweeps run alongside another suite"


def run_oracle_sweeps(name, seed=0, jobs=1):
    """
    Check the engines the named suite relies on against the oracle,
    skipping the named suite itself.

    >>> sorted(run_oracle_sweeps('norm-oracle'))
    ['membership-oracle']
    """
    return {
        sweep: run(sweep, seed=seed, jobs=jobs, config=config)
        for sweep, config in ORACLE_SWEEPS.items()
        if sweep != name
    }


def run(name, seed=0, jobs=1, config=None):
    """
    Run the named suite. With more than one job the cases are checked
    in a process pool; violations keep the order of their cases.
    """
    try:
        suite = SUITES[name](config)
    except KeyError:
        raise ValueError(f"Unknown property suite {name!r}; choose from {sorted(SUITES)}") from None
    cases = list(suite.cases(random.Random(seed)))
    log.info("Running %s over %d cases with %d job(s)", name, len(cases), jobs)
    if jobs > 1:
        chunksize = max(1, len(cases) // (jobs * 16))
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(suite.evaluate, cases, chunksize=chunksize))
    else:
        outcomes = map(suite.evaluate, cases)
    report = VerificationReport(cases=len(cases))
    for position, violations in enumerate(outcomes):
        report.violations.extend(
            Violation(dict(case=position, at=found.location), found.lhs, found.rhs, found.deficit)
            for found in violations
        )
    return report
