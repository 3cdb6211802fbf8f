"""Tests for the superfrieze command line"""

import sys
import os
import io
import json

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

SAMPLES = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'samples'))


def _run(*argv):
    from superfrieze.cli import run

    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_counts():
    code, out, _ = _run('counts', 'even', '6')
    assert code == 0
    assert out.strip() == '1 3 6 14 31 70'

    code, out, _ = _run('counts', 'bracket', '4', '--json')
    assert code == 0
    assert json.loads(out) == [1, 2, 4, 9]

    code, _, err = _run('counts', 'even', '12')
    assert code == 2
    assert 'max_n' in err

    print("✓ Counts command test passed")


def test_continuant():
    from superfrieze.core.continuants import ContinuantSpec, supercontinuant

    expected = str(supercontinuant(ContinuantSpec.symbolic('even', 2)))
    code, out, _ = _run('continuant', 'even', '2')
    assert code == 0
    assert out.strip() == expected

    code, out, _ = _run('continuant', 'odd', '3', '--method', 'determinant', '--json')
    assert code == 0
    payload = json.loads(out)
    assert payload['terms'] == 5
    assert payload['method'] == 'determinant'

    print("✓ Continuant command test passed")


def test_hill_variety():
    from superfrieze.core.variety import published_equations

    code, out, _ = _run('hill-variety', '4', '--seed', '5')
    assert code == 0
    assert f"{published_equations(4)[0]} = 0" in out
    assert 'published form:' in out
    assert out.strip().endswith('verified by substitution: true')

    code, out, _ = _run('hill-variety', '3', '--json', '--seed', '5')
    assert code == 0
    payload = json.loads(out)
    assert payload['n'] == 3
    assert payload['verified'] is True

    print("✓ Hill variety command test passed")


def test_hill_monodromy():
    code, out, _ = _run('hill-monodromy', '--a', '1,1,1', '--beta=-beta,beta,-beta')
    assert code == 0
    assert out.strip().endswith('hill condition: true')

    code, out, _ = _run('hill-monodromy', '--a', '2,2,2,2', '--beta', '0,0,0,0', '--json')
    assert code == 1
    assert json.loads(out)['hill_condition'] is False

    print("✓ Hill monodromy command test passed")


def test_frieze_check_samples():
    for name in ('width1.json', 'pentagramma.json'):
        code, out, _ = _run('frieze-check', '--input', os.path.join(SAMPLES, name))
        assert code == 0, name
        assert out.strip().endswith('all checks pass')

    print("✓ Frieze check sample test passed")


def test_frieze_gen_random_then_check():
    """A generated dump is accepted back by frieze-check"""
    code, out, _ = _run('frieze-gen', '--random-width', '2', '--seed', '7', '--json')
    assert code == 0
    payload = json.loads(out)
    assert payload['frieze']['m'] == 2
    assert payload['text']

    from superfrieze.core.frieze import Superfrieze, check_report
    assert check_report(Superfrieze.from_dict(payload['frieze']))['all_pass']

    print("✓ Frieze generation test passed")


def test_sl_apply():
    code, out, _ = _run('sl-apply', '--a', 'a1,a2,a3', '--beta', 'b1,b2,b3',
                        '--v', 'V0,V1,V2', '--w', 'W0,W1,W2')
    assert code == 0
    lines = out.strip().split('\n')
    assert len(lines) == 1
    assert lines[0].startswith('2: ')

    print("✓ Sturm-Liouville command test passed")


def test_input_errors():
    code, _, err = _run('frieze-check', '--a', '1,2.5,1,1', '--beta', '0,0,0,0')
    assert code == 2
    assert 'position' in err

    code, _, _ = _run('no-such-command')
    assert code == 2

    code, _, _ = _run('frieze-check', '--input', os.path.join(SAMPLES, 'missing.json'))
    assert code == 2

    print("✓ Input error test passed")


if __name__ == '__main__':
    print("Running superfrieze CLI tests...\n")
    test_counts()
    test_continuant()
    test_hill_variety()
    test_hill_monodromy()
    test_frieze_check_samples()
    test_frieze_gen_random_then_check()
    test_sl_apply()
    test_input_errors()
    print("\n✓ All tests passed!")
