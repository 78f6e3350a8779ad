import fractions
import json

import pytest

from schreier.spaces import config
from schreier.spaces.errors import (
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
from schreier.spaces.families import FinSet, is_maximal
from schreier.spaces.norms import Approx, Exact, norm
from schreier.spaces.ordinals import Ordinal
from schreier.spaces.tingley import (
    MapTable,
    VerificationReport,
    check_fact1,
    check_imp_identity,
    check_l1,
    check_l3,
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
from schreier.spaces.vectors import SignSeq, Vector

S0, S1, S2 = (Ordinal(0, r) for r in range(3))
OMEGA = Ordinal(1, 0)
Fraction = fractions.Fraction
e = Vector.basis


def pythagorean(i, j):
    return Vector({i: '3/5', j: '4/5'})


class TestMapTable:
    def test_rejects_off_sphere(self):
        with pytest.raises(NotOnSphere) as info:
            MapTable([(e(2), e(2) + e(3))], S1, Exact(1))
        assert info.value.details['entries'] == [dict(index=0, side='output')]

    def test_rejects_duplicate_inputs(self):
        with pytest.raises(ValueError):
            MapTable([(e(2), e(2)), (e(2), -e(2))], S1, Exact(1))

    def test_json(self):
        table = MapTable([(pythagorean(2, 3), -pythagorean(2, 3))], S1, Exact(2))
        data = json.loads(json.dumps(table.as_json()))
        assert data == dict(
            alpha='1',
            p={'exact': 2},
            pairs=[[{'2': '3/5', '3': '4/5'}, {'2': '-3/5', '3': '-4/5'}]],
        )
        assert MapTable.from_json(data).pairs == table.pairs

    def test_inverse(self):
        table = MapTable([(e(2), -e(2)), (e(3), e(3))], S1, Exact(1))
        assert table.inverse().image(-e(2)) == e(2)
        assert len(table.inverse()) == 2


class TestVerifyIsometry:
    def test_diagonal(self):
        xs = [e(index) for index in range(1, 7)] + [
            pythagorean(2, 3),
            pythagorean(4, 6),
            Vector({5: '-5/13', 7: '12/13'}),
        ]
        table = diagonal_table(SignSeq.alternating(7), xs, S1, Exact(2))
        report = verify_isometry(table)
        assert report.ok
        assert report.cases == 66

    def test_wrong_image(self):
        table = MapTable([(e(2), e(2)), (e(3), e(3)), (e(4), e(1))], S1, Exact(1))
        report = verify_isometry(table)
        assert not report.ok
        assert [violation.location for violation in report.violations] == [(0, 2), (1, 2)]

    def test_empty(self):
        report = verify_isometry(MapTable([], S1, Exact(1)))
        assert report.ok and report.vacuous

    def test_fractional_exponent(self):
        table = diagonal_table(SignSeq([1, -1, 1]), [e(1), e(2), e(3)], S1, Approx('1.5'))
        assert verify_isometry(table).ok


class TestExtractSigns:
    def test_planted(self):
        table = diagonal_table(
            SignSeq.alternating(6), [e(index) for index in range(1, 7)], S1, Exact(1)
        )
        assert extract_signs(table, 6) == SignSeq([-1, 1, -1, 1, -1, 1])

    def test_not_diagonal(self):
        table = MapTable([(e(1), e(1)), (e(2), e(3))], S1, Exact(1))
        with pytest.raises(NotDiagonal) as info:
            extract_signs(table, 3)
        assert info.value.as_dict() == dict(code='NotDiagonal', i=2, image={'3': '1'})

    def test_rotated_image(self):
        table = MapTable([(e(1), e(1)), (e(2), pythagorean(2, 3))], S1, Exact(2))
        with pytest.raises(NotDiagonal):
            extract_signs(table, 2)

    def test_missing(self):
        table = MapTable([(e(1), e(1))], S1, Exact(1))
        with pytest.raises(MissingBasisPair):
            extract_signs(table, 2)

    def test_inverse_with_negative_signs(self):
        theta = SignSeq([-1, 1, -1])
        table = diagonal_table(theta, [e(1), e(2), e(3), pythagorean(2, 3)], S1, Exact(2))
        assert table.image(-e(1)) == e(1)
        assert len(table) == 6
        assert extract_signs(table.inverse(), 3) == theta

    def test_inverse_needs_reflected_basis(self):
        table = MapTable([(e(1), -e(1))], S1, Exact(1))
        with pytest.raises(MissingBasisPair):
            extract_signs(table.inverse(), 1)


class TestVerifyDiagonal:
    xs = [e(2), pythagorean(2, 3), pythagorean(3, 4)]

    def test_own_signs(self):
        theta = SignSeq([1, -1, 1, -1])
        table = diagonal_table(theta, self.xs, S1, Exact(2))
        assert verify_diagonal(table, theta).ok

    def test_flipped_sign(self):
        table = diagonal_table(SignSeq([1, -1, 1, -1]), self.xs, S1, Exact(2))
        report = verify_diagonal(table, SignSeq([1, -1, -1, -1]))
        assert {violation.location for violation in report.violations} == {(1, 3), (2, 3)}

    def test_extra_coordinate(self):
        x = Vector({2: '1/2', 3: '1/2'})
        y = Vector({2: '1/2', 5: '1/2'})
        table = MapTable([(x, y)], S1, Exact(1))
        locations = [violation.location for violation in verify_diagonal(table, SignSeq([1] * 5)).violations]
        assert locations == [(0, 3), (0, 5)]


@pytest.mark.parametrize(
    'x, n, p, expected',
    [
        (e(5), 5, Exact(2), True),
        (pythagorean(2, 3), 2, Exact(2), True),
        (Vector({2: '1/2', 3: '1/2'}), 2, Exact(1), False),
    ],
)
def test_check_l1(x, n, p, expected):
    assert check_l1(x, n, S1, p) is expected


class TestL3:
    @pytest.mark.parametrize(
        'u, alpha, p, witness',
        [
            (pythagorean(2, 3), S1, Exact(2), e(4)),
            (e(7), S2, Exact(3), e(2)),
            (-e(2), OMEGA, Exact(1), e(3)),
        ],
    )
    def test_witness(self, u, alpha, p, witness):
        x = l3_witness(u, alpha, p)
        assert x == witness
        for candidate in (u + x, u - x):
            assert norm(candidate, alpha, p).pth_power > 1

    def test_plus_minus_e1(self):
        with pytest.raises(IsPlusMinusE1):
            l3_witness(-e(1), S1, Exact(2))

    def test_order(self):
        with pytest.raises(UnsupportedOrder):
            l3_witness(e(3), S0, Exact(2))

    def test_reverse(self):
        assert check_l3(e(1), pythagorean(2, 3), S1, Exact(2))
        assert check_l3(-e(1), e(5), S2, Exact(1))
        assert check_l3(e(4), e(5), S1, Exact(1))


class TestImpIdentity:
    def test_pythagorean(self):
        assert check_imp_identity(FinSet([2, 3]), ['9/25', '16/25'], [1, 1], 1, S1, Exact(2))

    def test_single(self):
        assert check_imp_identity(FinSet([3]), [1], [1], 1, S1, Exact(2))

    def test_negative_sign(self):
        assert check_imp_identity(FinSet([4, 5]), ['1/2', '1/2'], [1, -1], 2, S1, Exact(1))

    def test_fractional(self):
        weights = ['1/4', '3/4']
        assert check_imp_identity(FinSet([3, 4]), weights, [-1, 1], 2, S1, Approx('1.5'))

    def test_not_admissible(self):
        with pytest.raises(NotAMember):
            check_imp_identity(FinSet([2, 3, 4]), ['1/4', '1/4', '1/2'], [1, 1, 1], 1, S1, Exact(1))

    def test_not_normalized(self):
        with pytest.raises(WeightsNotNormalized):
            check_imp_identity(FinSet([2, 3]), ['1/2', '1/4'], [1, 1], 1, S1, Exact(1))


def test_check_fact1():
    assert check_fact1(pythagorean(2, 3), 2, S1)
    assert check_fact1(pythagorean(3, 4), 5, S2)


class TestFact4:
    def test_small(self):
        assert fact4_witness(3, 2, S1) == Vector({5: '3/5', 6: '4/5'})

    def test_support(self):
        x = fact4_witness(4, 2, S1)
        assert x.support == FinSet([6, 7, 8])
        assert is_maximal(FinSet([4]) + x.support, S1)

    def test_s2(self):
        x = fact4_witness(3, 2, S2)
        assert x.support == FinSet(range(5, 28))
        assert norm(x, S2, Exact(2)).pth_power == 1

    @pytest.mark.parametrize('i, j', [(4, 3), (6, 2), (8, 7)])
    def test_norms(self, i, j):
        x = fact4_witness(i, j, S1)
        two = Exact(2)
        for sign in (1, -1):
            assert norm(x + sign * e(i), S1, two).pth_power == 2
            assert norm(x + sign * e(j), S1, two).pth_power < 2

    def test_order_of_indices(self):
        with pytest.raises(ValueError):
            fact4_witness(2, 3, S1)

    def test_budget(self):
        with pytest.raises(ConstructionFailed):
            fact4_witness(3, 2, S2, config.Budget(dict(witness_search=8)))


class TestLemma7:
    @pytest.mark.parametrize(
        'x, n, alpha',
        [
            (e(4), 4, S1),
            (Vector({2: '1/2', 3: '1/2'}), 4, S1),
            (-e(6), 6, S2),
        ],
    )
    def test_holds(self, x, n, alpha):
        assert check_lemma7(x, n, alpha)

    def test_excludes_e1(self):
        with pytest.raises(ExcludedInput):
            check_lemma7(e(1), 3, S1)


class TestLemma20:
    @pytest.mark.parametrize(
        'x, i, j',
        [
            (Vector({5: '1/2', 6: '1/2'}), 3, 4),
            (e(2), 3, 4),
            (e(1), 2, 3),
        ],
    )
    def test_holds(self, x, i, j):
        assert check_lemma20(x, i, j, S1)

    def test_indices(self):
        with pytest.raises(ValueError):
            check_lemma20(e(2), 4, 3, S1)


class TestLemma23:
    @pytest.mark.parametrize(
        'x, i, j',
        [
            (Vector({2: '1/2', 3: '1/2'}), 2, 3),
            (e(4), 2, 3),
            (Vector({2: '1/2', 3: '1/2'}), 2, 5),
        ],
    )
    def test_holds(self, x, i, j):
        assert check_lemma23(x, i, j, S2)

    def test_needs_order_two(self):
        with pytest.raises(UnsupportedOrder):
            check_lemma23(e(4), 2, 3, S1)

    def test_excludes_first_coordinate(self):
        with pytest.raises(ExcludedInput):
            check_lemma23(e(1), 2, 3, S2)


class TestLemma1:
    def test_attained(self):
        report = check_lemma1_p1(e(4), Vector({4: '1/2', 5: '1/2'}), S1)
        assert report.ok
        assert report.witnesses == [FinSet([4, 5])]

    def test_vacuous(self):
        report = check_lemma1_p1(e(2), -e(2), S1)
        assert report.ok and report.vacuous

    def test_off_sphere(self):
        with pytest.raises(NotOnSphere):
            check_lemma1_p1(e(2), e(2) + e(3), S1)


def test_report_json():
    report = VerificationReport(cases=1)
    report.add((0, 3), Fraction(1, 2), Fraction(-1, 2), Fraction(1))
    assert report.as_json() == dict(
        ok=False,
        cases=1,
        vacuous=False,
        violations=[dict(location=[0, 3], lhs='1/2', rhs='-1/2', deficit='1')],
    )
