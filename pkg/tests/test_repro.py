import pytest

from doublepoints.errors import InputError
from doublepoints.repro import Check, find_cases, repro_manifest


def test_manifest_names_are_unique():
    names = [case.name for case in repro_manifest()]
    assert len(names) == len(set(names))
    for name in ['example-4.1', 'example-6.1-part1', 'example-6.1-part2', 'remark-3.2', 'remark-3.3']:
        assert name in names
    assert ['normal-forms-%d' % s for s in range(1, 13)] == [n for n in names if n.startswith('normal-forms-')]
    assert [case.name for case in repro_manifest() if case.slow] == ['example-6.1-part2']
    assert all(case.anchor for case in repro_manifest())


def test_find_cases():
    assert len(find_cases(['normal-forms'])) == 12
    assert [case.name for case in find_cases(['example-6.1'])] == ['example-6.1-part1', 'example-6.1-part2']
    assert 'example-6.1-part2' not in [case.name for case in find_cases(include_slow=False)]
    with pytest.raises(InputError):
        find_cases(['no-such-case'])
    with pytest.raises(InputError):
        find_cases(['example-4'])


def test_check_display():
    check = Check('flag', True, False)
    assert not check.passed
    assert check.to_dict() == {'check': 'flag', 'expected': 'True', 'observed': 'False', 'passed': False}


@pytest.mark.parametrize('name', ['example-4.1', 'remark-3.2', 'remark-3.3', 'ordinary-cusp',
                                  'normal-forms-1', 'normal-forms-6', 'normal-forms-12'])
def test_fast_cases_pass(name):
    result, = [case.run() for case in find_cases([name])]
    assert result.passed, result.to_dict()
    assert all(record['case'] == name for record in result.records())


def test_projection_case_checks_printed_ideals():
    result, = [case.run() for case in find_cases(['example-6.1-part1'])]
    assert result.passed, result.to_dict()
    names = [check.name for check in result.checks]
    assert 'image of 4A+4B' in names
    assert 'Hilbert function of the image of 4A+4B' in names


@pytest.mark.slow
def test_census_case_passes():
    result, = [case.run() for case in find_cases(['example-6.1-part2'])]
    assert result.passed, result.to_dict()
    assert 'Hilbert function of the radical of X_2' in [check.name for check in result.checks]
