import json

import pytest
from click.testing import CliRunner

from schreier.spaces.cli import main

from . import samples


@pytest.fixture
def invoke():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, [str(arg) for arg in args])

    return invoke


def output(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_member(invoke):
    result = invoke('member', '--alpha', 1, '--set', '2,3')
    assert result.output == '{"member": true}\n'


def test_member_oracle(invoke):
    result = invoke('member', '--alpha', 'w+1', '--set', '3,4,5,6,7,8', '--oracle')
    assert output(result) == dict(member=True)


def test_maximal(invoke):
    assert output(invoke('maximal', '--alpha', 1, '--set', '3,4', '--oracle')) == dict(maximal=False)
    assert output(invoke('maximal', '--alpha', 2, '--set', '1')) == dict(maximal=True)


def test_decompose(invoke):
    result = invoke('decompose', '--alpha', 2, '--set', '2,3,4,5,6,7', '--oracle')
    assert output(result) == dict(blocks=[[2, 3], [4, 5, 6, 7]])


def test_decompose_not_maximal(invoke):
    result = invoke('decompose', '--alpha', 1, '--set', '3,4')
    assert result.exit_code == 1
    assert json.loads(result.output)['code'] == 'NotMaximal'


def test_enumerate(invoke):
    result = invoke('enumerate', '--alpha', 1, '--n', 4, '--maximal', '--oracle')
    assert output(result) == dict(count=3, sets=[[1], [2, 3], [2, 4]])
    assert output(invoke('enumerate', '--alpha', 0, '--n', 2, '--oracle'))['count'] == 3


def test_norm(invoke):
    vec = '{"2": "1", "3": "1", "4": "1"}'
    data = output(invoke('norm', '--alpha', 1, '--p', 1, '--vec', vec, '--oracle'))
    assert data == dict(pth_power='2', p=1, approx=2.0)


def test_norm_beyond_float_range(invoke):
    data = output(invoke('norm', '--alpha', 1, '--p', 2, '--vec', '{"2": "1e400"}'))
    assert data == dict(pth_power=str(10**800), p=2, approx='1.0e+400')


def test_norm_integral_decimal_exponent(invoke):
    vec = '{"2": "1", "3": "1", "4": "1"}'
    data = output(invoke('norm', '--alpha', 1, '--p', '2.0', '--vec', vec))
    assert data == dict(pth_power='2', p=2, approx=pytest.approx(2**0.5))


def test_norm_fractional(invoke):
    vec = '{"2": "1", "3": "1"}'
    data = output(invoke('norm', '--alpha', 1, '--p', '1.5', '--vec', vec, '--tolerance', '1e-9'))
    assert data['p'] == '1.5'
    assert data['approx'] == pytest.approx(2 ** (2 / 3))


def test_norm_from_file(invoke, tmp_path):
    path = tmp_path / 'x.json'
    path.write_text('{"2": "3/5", "3": "4/5"}', encoding='utf-8')
    data = output(invoke('norm', '--alpha', 1, '--p', 2, '--vec', f'@{path}'))
    assert data['pth_power'] == '1'


def test_norming_sets(invoke):
    vec = '{"2": "1", "3": "1", "4": "1"}'
    data = output(invoke('norming-sets', '--alpha', 1, '--vec', vec, '--oracle'))
    assert data == dict(norming_sets=[[2, 3], [2, 4], [3, 4]])


def test_one_sets(invoke):
    data = output(invoke('one-sets', '--alpha', 1, '--vec', '{"4": "1/2", "5": "1/2"}', '--oracle'))
    assert data == dict(one_sets=[[4, 5]], gap='1/2', nonmaximal_one_set=[4, 5])


def test_gap(invoke):
    result = invoke('gap', '--alpha', 1, '--vec', '{"2": "2/3", "3": "1/3"}', '--oracle')
    assert output(result) == dict(gap='1/3')


def test_not_on_sphere(invoke):
    result = invoke('gap', '--alpha', 1, '--vec', '{"2": "1", "3": "1"}')
    assert result.exit_code == 1
    assert json.loads(result.output)['code'] == 'NotOnSphere'


def write_table(tmp_path, table):
    path = tmp_path / 'table.json'
    path.write_text(json.dumps(table), encoding='utf-8')
    return path


def test_isometry_verify(invoke, tmp_path):
    path = write_table(tmp_path, samples.sample_PythagoreanL2().as_json())
    data = output(invoke('isometry', 'verify', '--table', path, '--oracle'))
    assert data['ok'] is True
    assert data['cases'] == 28


def test_isometry_extract(invoke, tmp_path):
    path = write_table(tmp_path, samples.sample_AlternatingL1().as_json())
    data = output(invoke('isometry', 'extract', '--n', 5, '--table', path))
    assert data == dict(signs=[-1, 1, -1, 1, -1])


def test_isometry_extract_oracle(invoke, tmp_path):
    path = write_table(tmp_path, samples.sample_CubesS2().as_json())
    data = output(invoke('isometry', 'extract', '--n', 4, '--table', path, '--oracle'))
    assert data == dict(signs=[-1, 1, -1, -1])


def test_isometry_extract_not_diagonal(invoke, tmp_path):
    table = dict(
        alpha='1',
        p={'exact': 1},
        pairs=[[{'1': '1'}, {'1': '1'}], [{'2': '1'}, {'3': '1'}]],
    )
    result = invoke('isometry', 'extract', '--n', 3, '--table', write_table(tmp_path, table))
    assert result.exit_code == 1
    assert json.loads(result.output) == dict(code='NotDiagonal', i=2, image={'3': '1'})


def test_witness_fact4(invoke):
    data = output(invoke('witness', 'fact4', '--alpha', 1, '--i', 3, '--j', 2, '--oracle'))
    assert data == dict(witness={'5': '3/5', '6': '4/5'}, support=[5, 6])


def test_witness_l3(invoke):
    vec = '{"2": "3/5", "3": "4/5"}'
    data = output(invoke('witness', 'l3', '--alpha', 1, '--p', 2, '--vec', vec, '--oracle'))
    assert data == dict(witness={'4': '1'})


def test_witness_l3_e1(invoke):
    result = invoke('witness', 'l3', '--alpha', 1, '--vec', '{"1": "-1"}')
    assert result.exit_code == 1
    assert json.loads(result.output)['code'] == 'IsPlusMinusE1'


def test_property(invoke):
    names = output(invoke('property', 'list'))
    assert 'membership-oracle' in names
    data = output(invoke('property', 'run', 'goodness'))
    assert data['ok'] is True
    assert data['name'] == 'goodness'


def test_property_oracle(invoke):
    names = output(invoke('property', 'list', '--oracle'))
    assert sorted(names) == ['membership-oracle', 'norm-oracle']
    data = output(invoke('property', 'run', 'goodness', '--oracle'))
    assert data['ok'] is True


def test_pretty(invoke):
    result = invoke('--format', 'pretty', 'member', '--alpha', 'w', '--set', '2,3')
    assert result.output == '{\n  "member": true\n}\n'


@pytest.mark.parametrize(
    'args',
    [
        ['member', '--alpha', 'w*1', '--set', '2,3'],
        ['member', '--alpha', '1', '--set', '3,2'],
        ['norm', '--alpha', '1', '--vec', '[1, 2]'],
        ['norm', '--alpha', '1', '--p', '0.5', '--vec', '{"2": "1"}'],
        ['norm', '--alpha', '1', '--p', '1.5', '--tolerance', '0', '--vec', '{"2": "1"}'],
        ['witness', 'fact4', '--alpha', '1', '--i', '2', '--j', '3'],
        ['property', 'run', 'nonesuch'],
        ['frobnicate'],
    ],
)
def test_usage_errors(invoke, args):
    assert invoke(*args).exit_code == 2
