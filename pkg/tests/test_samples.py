import pytest

from schreier.spaces.tingley import extract_signs, verify_diagonal, verify_isometry

from . import samples


@pytest.mark.parametrize(
    'sample', [table for name, table in samples.generate_samples()]
)
def test_sample(sample):
    assert verify_isometry(sample).ok


@pytest.mark.parametrize(
    'sample', [table for name, table in samples.generate_samples()]
)
def test_sample_signs(sample):
    N = max(x.support.maximum for x, _ in sample)
    signs = extract_signs(sample, N)
    assert verify_diagonal(sample, signs).ok
    assert extract_signs(sample.inverse(), N) == signs
