import fractions

import pytest

from schreier.spaces.errors import SignsMissing
from schreier.spaces.vectors import SignSeq, Vector


class TestVector:
    def test_zero_coordinates_dropped(self):
        x = Vector({2: '1/2', 3: 0})
        assert list(x) == [2]
        assert x[3] == 0

    def test_json(self):
        x = Vector.from_json('{"3": "4/5", "2": "3/5"}')
        assert x.as_json() == {'2': '3/5', '3': '4/5'}

    @pytest.mark.parametrize('text', ['[1, 2]', '{"0": "1"}', '{"2": "x"}'])
    def test_json_invalid(self, text):
        with pytest.raises((ValueError, TypeError)):
            Vector.from_json(text)

    def test_arithmetic(self):
        x = Vector({2: '1/2', 3: '1/2'})
        assert x + x == Vector({2: 1, 3: 1})
        assert x - x == Vector()
        assert -x == fractions.Fraction(-1) * x
        assert not Vector()

    def test_restrict(self):
        x = Vector({2: '1/2', 3: '1/2', 7: 1})
        assert x.restrict([3, 7, 9]) == Vector({3: '1/2', 7: 1})

    def test_hashable(self):
        assert len({Vector.basis(2), Vector({2: 1}), Vector.basis(3)}) == 2


class TestSignSeq:
    def test_parse(self):
        assert SignSeq.parse('+,-,+') == SignSeq([1, -1, 1])
        assert SignSeq.parse('[-1, 1]') == SignSeq([-1, 1])
        assert SignSeq.parse('') == SignSeq()

    def test_invalid(self):
        with pytest.raises(ValueError):
            SignSeq([1, 0])

    def test_one_based(self):
        theta = SignSeq([1, -1])
        assert theta[2] == -1
        with pytest.raises(IndexError):
            theta[0]

    def test_apply_needs_every_sign(self):
        with pytest.raises(SignsMissing):
            SignSeq([1, -1]).apply(Vector.basis(3))

    def test_alternating(self):
        assert SignSeq.alternating(6) == SignSeq([-1, 1, -1, 1, -1, 1])
