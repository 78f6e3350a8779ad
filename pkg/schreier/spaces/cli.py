"""
The ``schreier`` command.

Every subcommand prints one JSON document on stdout. Domain errors
print their structured form and exit 1; malformed input is a usage
error and exits 2.

>>> from click.testing import CliRunner
>>> result = CliRunner().invoke(main, ['member', '--alpha', '1', '--set', '2,3'])
>>> result.output
'{"member": true}\\n'
>>> result.exit_code
0
"""

import functools
import itertools
import json
import logging
import operator

import click
import more_itertools

from . import families, oracle, properties, tingley
from .errors import OracleDisagreement, SchreierError
from .families import FinSet
from .norms import Approx, Exponent, NormValue, norm, norming_sets
from .one_sets import ONE
from .one_sets import gap as one_set_gap
from .one_sets import report as one_set_report
from .ordinals import Ordinal
from .vectors import Vector

log = logging.getLogger(__name__)


class OrdinalType(click.ParamType):
    name = 'ordinal'

    def convert(self, value, param, ctx):
        try:
            return Ordinal.parse(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class FinSetType(click.ParamType):
    name = 'set'

    def convert(self, value, param, ctx):
        try:
            return FinSet.parse(value)
        except (ValueError, TypeError) as exc:
            self.fail(str(exc), param, ctx)


class VectorType(click.ParamType):
    """
    A vector as a JSON object, or ``@path`` to read one from a file.
    """

    name = 'vector'

    def convert(self, value, param, ctx):
        if isinstance(value, Vector):
            return value
        try:
            if value.startswith('@'):
                with open(value[1:], encoding='utf-8') as stream:
                    value = stream.read()
            return Vector.from_json(value)
        except (OSError, ValueError, TypeError) as exc:
            self.fail(str(exc), param, ctx)


class ExponentType(click.ParamType):
    name = 'exponent'

    def convert(self, value, param, ctx):
        try:
            return Exponent.parse(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class Group(click.Group):
    """
    Map domain errors to exit 1 and bad literals to usage errors.
    """

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except SchreierError as exc:
            log.debug("Domain error: %s", exc)
            emit(ctx, exc.as_dict())
            ctx.exit(1)
        except (ValueError, TypeError) as exc:
            raise click.UsageError(str(exc), ctx) from exc


def emit(ctx, data):
    indent = 2 if ctx.find_root().params.get('format') == 'pretty' else None
    click.echo(json.dumps(data, sort_keys=True, indent=indent, default=str))


def exponent(p, tolerance):
    if tolerance is None:
        return p
    if tolerance <= 0:
        raise click.BadParameter("tolerance must be positive", param_hint='--tolerance')
    if isinstance(p, Approx):
        return Approx(p.text, tolerance=tolerance, dps=p.dps)
    return p


def cross_check(check, fast, slow, same=operator.eq):
    if not same(fast, slow):
        log.warning("Oracle disagreement on %s: %s != %s", check, fast, slow)
        raise OracleDisagreement(check=check, fast=fast, slow=slow)
    log.debug("Oracle agrees on %s", check)


alpha_option = click.option(
    '--alpha', type=OrdinalType(), required=True, help="Order of the family, e.g. 1, w, w+2."
)
p_option = click.option(
    '--p', 'p', type=ExponentType(), default='1', show_default=True, help="Exponent, e.g. 2 or 1.5."
)
vec_option = click.option(
    '--vec', type=VectorType(), required=True, help="Vector as JSON, or @file."
)
set_option = click.option('--set', 'F', type=FinSetType(), required=True, help="Set, e.g. 2,3,5.")
oracle_option = click.option(
    '--oracle', is_flag=True, help="Cross-check the result against the brute-force oracle."
)
tolerance_option = click.option(
    '--tolerance', type=float, default=None, help="Comparison tolerance for fractional p."
)


def numeric(func):
    """
    Options shared by the commands that compute norms.
    """

    @alpha_option
    @p_option
    @tolerance_option
    @oracle_option
    @functools.wraps(func)
    def wrapper(p, tolerance, **kwargs):
        return func(p=exponent(p, tolerance), **kwargs)

    return wrapper


@click.group(cls=Group)
@click.option(
    '--format',
    type=click.Choice(['json', 'pretty']),
    default='json',
    show_default=True,
    help="Compact JSON or indented JSON.",
)
@click.option('-v', '--verbose', count=True, help="Log to stderr; repeat for more detail.")
def main(format, verbose):
    """
    Schreier families, the norms of their p-convexifications and
    checks on sphere isometries.
    """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(name)s %(levelname)s %(message)s')


@main.command()
@alpha_option
@set_option
@oracle_option
@click.pass_context
def member(ctx, alpha, F, oracle):
    """Is the set in S_α?"""
    result = families.is_member(F, alpha)
    if oracle:
        cross_check('member', result, _oracle_member(F, alpha))
    emit(ctx, dict(member=result))


@main.command()
@alpha_option
@set_option
@oracle_option
@click.pass_context
def maximal(ctx, alpha, F, oracle):
    """Is the set maximal in S_α?"""
    result = families.is_maximal(F, alpha)
    if oracle:
        cross_check('maximal', result, _oracle_maximal(F, alpha))
    emit(ctx, dict(maximal=result))


@main.command()
@alpha_option
@set_option
@oracle_option
@click.pass_context
def decompose(ctx, alpha, F, oracle):
    """Split a maximal set of a successor family into maximal blocks."""
    blocks = families.decompose_maximal(F, alpha)
    if oracle:
        beta = alpha.predecessor
        every = all(_oracle_maximal(block, beta) for block in blocks)
        cross_check('decompose', True, every)
    emit(ctx, dict(blocks=[block.as_json() for block in blocks]))


@main.command('enumerate')
@alpha_option
@click.option('--n', 'N', type=click.IntRange(min=1), required=True, help="Universe {1..N}.")
@click.option('--maximal', 'only_maximal', is_flag=True, help="Only the maximal sets.")
@oracle_option
@click.pass_context
def enumerate_(ctx, alpha, N, only_maximal, oracle):
    """List the members of S_α within {1..N}."""
    if only_maximal:
        found = families.enumerate_maximal(alpha, N)
    else:
        found = families.enumerate_sets(alpha, N)
    if oracle:
        test = _oracle_maximal if only_maximal else _oracle_member
        slow = [
            FinSet(subset)
            for subset in more_itertools.powerset(range(1, N + 1))
            if test(subset, alpha)
        ]
        cross_check('enumerate', sorted(map(list, found)), sorted(map(list, slow)))
    emit(ctx, dict(count=len(found), sets=[F.as_json() for F in found]))


@main.command('norm')
@numeric
@vec_option
@click.pass_context
def norm_(ctx, alpha, p, vec, oracle):
    """The norm of a vector, as its p-th power."""
    value = norm(vec, alpha, p)
    if oracle:
        cross_check('norm', value, oracle_norm(vec, alpha, p), same=NormValue.is_close)
    emit(ctx, value.as_json())


@main.command('norming-sets')
@numeric
@vec_option
@click.pass_context
def norming_sets_(ctx, alpha, p, vec, oracle):
    """Every admissible set on which the norm is attained."""
    found = norming_sets(vec, alpha, p)
    if oracle:
        slow = oracle_norm(vec, alpha, p)
        with p.context():
            attained = all(
                _oracle_member(F, alpha)
                and slow.is_close(sum((p.weight(vec[i]) for i in F), p.zero))
                for F in found
            )
        cross_check('norming-sets', attained, True)
    emit(ctx, dict(norming_sets=[F.as_json() for F in found]))


@main.command('one-sets')
@alpha_option
@vec_option
@oracle_option
@click.pass_context
def one_sets_(ctx, alpha, vec, oracle):
    """The 1-sets, the gap and the non-maximal 1-sets of a p = 1 sphere vector."""
    if oracle:
        cross_check('sphere', oracle_norm(vec, alpha, ONE).pth_power, 1)
    emit(ctx, one_set_report(vec, alpha).as_json())


@main.command()
@alpha_option
@vec_option
@oracle_option
@click.pass_context
def gap(ctx, alpha, vec, oracle):
    """The distance from 1 to the largest admissible sum below 1."""
    result = one_set_gap(vec, alpha)
    if oracle:
        sums = (
            sum(abs(vec[index]) for index in subset)
            for subset in more_itertools.powerset(vec.support)
            if _oracle_member(subset, alpha)
        )
        cross_check('gap', result, 1 - max((total for total in sums if total < 1), default=0))
    emit(ctx, dict(gap=str(result)))


@main.group()
def isometry():
    """Checks on tabulated maps between unit spheres."""


table_option = click.option(
    '--table', type=click.File('r', encoding='utf-8'), required=True, help="Map table JSON file."
)


@isometry.command()
@table_option
@oracle_option
@click.pass_context
def verify(ctx, table, oracle):
    """Compare pairwise distances before and after the map."""
    table = tingley.MapTable.from_json(table.read())
    report = tingley.verify_isometry(table)
    if oracle:
        slow = all(
            oracle_norm(x1 - x2, table.alpha, table.exponent).is_close(
                oracle_norm(y1 - y2, table.alpha, table.exponent)
            )
            for (x1, y1), (x2, y2) in itertools.combinations(table.pairs, 2)
        )
        cross_check('isometry', report.ok, slow)
    emit(ctx, report.as_json())


@isometry.command()
@table_option
@click.option('--n', 'N', type=click.IntRange(min=1), required=True, help="Read θ_1..θ_N.")
@oracle_option
@click.pass_context
def extract(ctx, table, N, oracle):
    """Read the signs θ_1..θ_N off the images of the basis vectors."""
    table = tingley.MapTable.from_json(table.read())
    signs = tingley.extract_signs(table, N)
    if oracle:
        cross_check('signs', signs.as_json(), _oracle_signs(table, N))
    emit(ctx, dict(signs=signs.as_json()))


@main.group('property')
def property_():
    """Named property sweeps."""


@property_.command('list')
@click.option('--oracle', is_flag=True, help="Only the suites checked against the brute-force oracle.")
@click.pass_context
def list_(ctx, oracle):
    """Name and describe every suite."""
    emit(ctx, properties.describe(oracle=oracle))


@property_.command('run')
@click.argument('name', type=click.Choice(sorted(properties.SUITES)))
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--jobs', type=click.IntRange(min=1), default=1, show_default=True)
@click.option(
    '--oracle', is_flag=True, help="Also sweep the fast engines against the brute-force oracle."
)
@click.pass_context
def run_suite(ctx, name, seed, jobs, oracle):
    """Run one suite and report its violations."""
    report = properties.run(name, seed=seed, jobs=jobs)
    if oracle:
        for sweep, checked in properties.run_oracle_sweeps(name, seed=seed, jobs=jobs).items():
            cross_check(sweep, len(checked.violations), 0)
    emit(ctx, dict(name=name, seed=seed, **report.as_json()))
    if not report.ok:
        ctx.exit(1)


@main.group()
def witness():
    """Construct the test vectors used in the rigidity argument."""


@witness.command()
@numeric
@vec_option
@click.pass_context
def l3(ctx, alpha, p, vec, oracle):
    """A sphere vector x with min ‖vec ± x‖ > 1, for vec ≠ ±e_1."""
    x = tingley.l3_witness(vec, alpha, p)
    if oracle:
        for candidate in (vec + x, vec - x):
            value = oracle_norm(candidate, alpha, p)
            cross_check('l3', p.less(p.one, value.pth_power), True)
    emit(ctx, dict(witness=x.as_json()))


@witness.command()
@alpha_option
@click.option('--i', 'i', type=int, required=True)
@click.option('--j', 'j', type=int, required=True)
@oracle_option
@click.pass_context
def fact4(ctx, alpha, i, j, oracle):
    """At p = 2, x with ‖x ± e_i‖² = 2 and ‖x ± e_j‖² < 2."""
    x = tingley.fact4_witness(i, j, alpha)
    if oracle:
        two = Exponent.parse(2)
        cross_check('fact4', oracle_norm(x, alpha, two).pth_power, 1)
        for sign in (1, -1):
            plus_i = oracle_norm(x + sign * Vector.basis(i), alpha, two).pth_power
            plus_j = oracle_norm(x + sign * Vector.basis(j), alpha, two).pth_power
            cross_check('fact4', (plus_i, plus_j < 2), (2, True))
    emit(ctx, dict(witness=x.as_json(), support=x.support.as_json()))


def _oracle_member(F, alpha):
    return oracle.member_bruteforce(F, alpha)


def _oracle_signs(table, N):
    """
    Re-derive θ_1..θ_N from oracle distances: T(e_i) = θ_i e_i exactly
    when ‖T(e_i) - θ_i e_i‖ vanishes.
    """
    signs = []
    for index in range(1, N + 1):
        basis = Vector.basis(index)
        image = table.image(basis)
        found = [
            sign
            for sign in (1, -1)
            if image is not None
            and not oracle_norm(image - sign * basis, table.alpha, table.exponent).pth_power
        ]
        signs.append(found[0] if found else None)
    return signs


def _oracle_maximal(F, alpha):
    F = FinSet(F)
    if not F or not _oracle_member(F, alpha):
        return False
    return not _oracle_member(F.union([F.maximum + 1]), alpha)


def oracle_norm(x, alpha, p):
    return oracle.norm_bruteforce(x, alpha, p)


def run(argv=None):
    """
    Entry point for the console script.
    """
    return main(args=argv, prog_name='schreier')
