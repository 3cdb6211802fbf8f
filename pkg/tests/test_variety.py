"""Tests for the small-period Hill supervariety equations"""

import sys
import os

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_published_equations_verified(n):
    """Raw monodromy entries and the published forms vanish on random points"""
    from superfrieze.core.variety import verify_published

    result = verify_published(n, seed=11, samples=2)
    assert result['raw_vanish']
    assert result['published_vanish']
    assert result['verified']
    assert result['samples'] == 2


def test_period_four_even_equations():
    from superfrieze.core.grassmann import even, generator, odd
    from superfrieze.core.variety import published_equations

    a = {k: generator(even('a', k)) for k in range(1, 5)}
    b = {k: generator(odd('b', k)) for k in range(1, 5)}
    equations = published_equations(4)
    assert len(equations) == 8
    assert equations[0] == a[1] * a[2] - 2 + b[1] * b[2]
    # wraps with b_5 = -b_1
    assert equations[3] == a[4] * a[1] - 2 - b[4] * b[1]

    print("✓ Period four equation test passed")


def test_period_five_even_equation():
    from superfrieze.core.grassmann import even, generator, odd
    from superfrieze.core.variety import published_equations

    a = {k: generator(even('a', k)) for k in range(1, 6)}
    b = {k: generator(odd('b', k)) for k in range(1, 6)}
    assert published_equations(5)[0] == a[1] * a[2] - a[4] - 1 + b[1] * b[2]

    print("✓ Period five equation test passed")


def test_period_six_equations():
    """Cyclic even equation and the odd rows with their b_i b_{i+1} terms"""
    from superfrieze.core.grassmann import even, generator, odd
    from superfrieze.core.variety import published_equations

    a = {k: generator(even('a', k)) for k in range(1, 7)}
    b = {k: generator(odd('b', k)) for k in range(1, 7)}
    equations = published_equations(6)
    assert len(equations) == 12
    assert equations[0] == (a[1] + a[3] + a[5] - a[3] * a[4] * a[5]
                            - a[3] * b[4] * b[5] - a[5] * b[3] * b[4] - b[3] * b[5])
    # shifted by five: b_8, b_9, b_10 = -b_2, -b_3, -b_4
    assert equations[5] == (a[6] + a[2] + a[4] - a[2] * a[3] * a[4]
                            - a[2] * b[3] * b[4] - a[4] * b[2] * b[3] - b[2] * b[4])
    assert equations[6] == (b[1] + a[1] * b[2] + (a[1] * a[2] - 1 + b[1] * b[2]) * b[3]
                            + a[5] * b[4] + b[5])
    assert equations[11] == (b[6] - a[6] * b[1] - (a[6] * a[1] - 1 - b[6] * b[1]) * b[2]
                             - a[4] * b[3] - b[4])

    print("✓ Period six equation test passed")


def test_period_six_equations_vanish_on_hill_point():
    """Four odd generators, so the triple products of the b do not vanish"""
    import random
    from superfrieze.core.grassmann import even, odd, substitute
    from superfrieze.core.hill import is_hill
    from superfrieze.core.variety import published_equations, random_hill_point

    point = random_hill_point(6, random.Random(19))
    assert is_hill(point)
    assignment = {even('a', k): point.a_at(k) for k in range(1, 7)}
    assignment.update({odd('b', k): point.beta_at(k) for k in range(1, 7)})
    b1, b2, b3 = (assignment[odd('b', k)] for k in (1, 2, 3))
    assert b1 * b2 * b3 != 0
    for eq in published_equations(6):
        assert substitute(eq, assignment) == 0, eq

    print("✓ Period six Hill point test passed")


def test_random_points_are_hill():
    import random
    from superfrieze.core.hill import is_hill
    from superfrieze.core.variety import random_hill_point

    rng = random.Random(3)
    for n in (3, 4, 5, 6):
        point = random_hill_point(n, rng)
        assert point.n == n
        assert point.start == 1
        assert is_hill(point)

    print("✓ Random point test passed")


@pytest.mark.parametrize('n', [4, 5])
def test_published_equations_vanish_on_golden_friezes(n):
    """n = 4 on the width-1 example, n = 5 on the width-2 one"""
    from superfrieze.core.grassmann import even, odd, substitute
    from superfrieze.core.variety import published_equations
    from tests.test_frieze import pentagramma, width_one_frieze

    coeffs = (width_one_frieze() if n == 4 else pentagramma()).coeffs
    assignment = {even('a', k): coeffs.a_at(k) for k in range(1, n + 1)}
    assignment.update({odd('b', k): coeffs.beta_at(k) for k in range(1, n + 1)})
    for eq in published_equations(n):
        assert substitute(eq, assignment) == 0, eq

    print(f"✓ Golden frieze substitution test passed for n={n}")


def test_unsupported_period():
    from superfrieze.core.variety import linear_system, published_equations
    from superfrieze.utils.errors import DimensionMismatch

    with pytest.raises(DimensionMismatch):
        linear_system(7)
    with pytest.raises(DimensionMismatch):
        published_equations(2)

    print("✓ Unsupported period test passed")


if __name__ == '__main__':
    print("Running superfrieze variety tests...\n")
    for period in (3, 4, 5, 6):
        test_published_equations_verified(period)
    test_period_four_even_equations()
    test_period_five_even_equation()
    test_period_six_equations()
    test_period_six_equations_vanish_on_hill_point()
    test_random_points_are_hill()
    for period in (4, 5):
        test_published_equations_vanish_on_golden_friezes(period)
    test_unsupported_period()
    print("\n✓ All tests passed!")
