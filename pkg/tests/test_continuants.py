"""Tests for supercontinuants"""

import sys
import os

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest

EVEN_COUNTS = [1, 3, 6, 14, 31, 70, 157, 353, 793, 1782, 4004]
ODD_COUNTS = [1, 2, 5, 11, 25, 56, 126, 283, 636, 1429, 3211]
BRACKET_COUNTS = [1, 2, 4, 9, 20, 45, 101, 227, 510, 1146, 2575]


def _symbols(n):
    from superfrieze.core.grassmann import even, generator, odd

    a = [None] + [generator(even('a', k)) for k in range(1, n + 1)]
    b = [None] + [generator(odd('b', k)) for k in range(1, n + 1)]
    return a, b


@pytest.mark.parametrize('family', ['even', 'odd', 'bracket'])
def test_all_methods_agree(family):
    """Recurrence, Euler's rule, determinant and Berezinian coincide up to n = 7"""
    from superfrieze.core.continuants import ContinuantSpec, cross_check

    for n in range(1, 8):
        result = cross_check(ContinuantSpec.symbolic(family, n))
        assert result['agree'], (family, n)

    print(f"✓ Method agreement test passed for {family}")


def test_term_counts():
    """Number of monomials for n = 1..11"""
    from superfrieze.core.continuants import term_counts

    assert term_counts('even', 11) == EVEN_COUNTS
    assert term_counts('odd', 11) == ODD_COUNTS
    assert term_counts('bracket', 11) == BRACKET_COUNTS

    print("✓ Term count test passed")


def test_even_values():
    from superfrieze.core.continuants import ContinuantSpec, supercontinuant

    a, b = _symbols(3)
    expected = {
        1: a[1],
        2: a[1] * a[2] - 1 + b[1] * b[2],
        3: (a[1] * a[2] * a[3] - a[1] - a[3]
            + a[1] * b[2] * b[3] + a[3] * b[1] * b[2] + b[1] * b[3]),
    }
    for n, value in expected.items():
        assert supercontinuant(ContinuantSpec.symbolic('even', n)) == value

    print("✓ Even family values test passed")


def test_odd_values():
    from superfrieze.core.continuants import ContinuantSpec, supercontinuant

    a, b = _symbols(3)
    expected = {
        1: b[1],
        2: a[1] * b[2] + b[1],
        3: a[1] * a[2] * b[3] + a[1] * b[2] + b[1] * b[2] * b[3] + b[1] - b[3],
    }
    for n, value in expected.items():
        assert supercontinuant(ContinuantSpec.symbolic('odd', n)) == value

    print("✓ Odd family values test passed")


def test_bracket_values():
    from superfrieze.core.continuants import ContinuantSpec, supercontinuant

    _, b = _symbols(2)
    assert supercontinuant(ContinuantSpec.symbolic('bracket', 1)) == b[1]
    assert supercontinuant(ContinuantSpec.symbolic('bracket', 2)) == 1 + b[1] * b[2]

    print("✓ Bracket family values test passed")


def test_body_is_the_classical_continuant():
    """Dropping odd symbols leaves K(a_1, ..., a_n) with Fibonacci many terms"""
    from superfrieze.core.continuants import (
        ContinuantSpec, classical_tiling_count, continuant_classical, supercontinuant,
    )
    from superfrieze.core.grassmann import body

    for n in range(1, 8):
        spec = ContinuantSpec.symbolic('even', n)
        classical = continuant_classical(spec.a)
        assert body(supercontinuant(spec)) == classical
        assert len(classical) == classical_tiling_count(n)

    print("✓ Classical body test passed")


def test_euler_tilings():
    """K(a1 bb) has the dash a1 and the vanishing b1 b1"""
    from superfrieze.core.continuants import ContinuantSpec, enumerate_tilings, tiling_value

    spec = ContinuantSpec.symbolic('even', 1)
    tilings = list(enumerate_tilings(spec))
    assert len(tilings) == 2
    values = [tiling_value(spec, t) for t in tilings]
    assert spec.a_(1) in values
    assert str(tilings[0]) == 'dot(1) + dot(2)'

    print("✓ Euler tiling test passed")


def test_numeric_entries():
    """Concrete entries flow through every method"""
    from fractions import Fraction
    from superfrieze.core.continuants import ContinuantSpec, cross_check
    from superfrieze.core.grassmann import generator, odd

    xi, eta = generator(odd('xi')), generator(odd('eta'))
    spec = ContinuantSpec('even', 3, (2, Fraction(1, 2), 3), (xi, eta, xi))
    result = cross_check(spec)
    assert result['agree']
    # 2 * 1/2 * 3 - 2 - 3 + 2 eta xi + 3 xi eta + xi xi
    assert result['values']['recurrence'] == -2 + xi * eta

    print("✓ Numeric entry test passed")


def test_method_errors():
    from superfrieze.core.continuants import ContinuantSpec, supercontinuant
    from superfrieze.utils.errors import DimensionMismatch, ParityMismatch

    with pytest.raises(ValueError):
        supercontinuant(ContinuantSpec.symbolic('odd', 3), 'berezinian')
    with pytest.raises(ValueError):
        supercontinuant(ContinuantSpec.symbolic('even', 3), 'bogus')
    with pytest.raises(ValueError):
        ContinuantSpec.symbolic('triple', 2)
    with pytest.raises(DimensionMismatch):
        ContinuantSpec.symbolic('even', 0)
    with pytest.raises(ParityMismatch):
        ContinuantSpec('even', 1, (0,), (1,))

    print("✓ Method error test passed")


if __name__ == '__main__':
    print("Running superfrieze continuant tests...\n")
    for fam in ('even', 'odd', 'bracket'):
        test_all_methods_agree(fam)
    test_term_counts()
    test_even_values()
    test_odd_values()
    test_bracket_values()
    test_body_is_the_classical_continuant()
    test_euler_tilings()
    test_numeric_entries()
    test_method_errors()
    print("\n✓ All tests passed!")
