"""Tests for the expression parser"""

import sys
import os

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest
from hypothesis import given, settings

from tests.strategies import scalars


def _gens():
    from superfrieze.core.grassmann import even, generator, odd

    return (generator(even('x')), generator(even('y')),
            generator(odd('xi')), generator(odd('eta')))


@settings(max_examples=200, derandomize=True)
@given(scalars())
def test_printed_form_parses_back(u):
    """str() output is valid input"""
    from superfrieze.core.expression import parse_superscalar

    assert parse_superscalar(str(u)) == u


def test_arithmetic_and_juxtaposition():
    from superfrieze.core.expression import parse_superscalar

    x, y, xi, eta = _gens()
    assert parse_superscalar("2 x y") == 2 * x * y
    assert parse_superscalar("x (1 + y)") == x + x * y
    assert parse_superscalar("x^2 - x**2") == 0
    assert parse_superscalar("xi eta + eta xi") == 0
    assert parse_superscalar("xi xi") == 0
    assert parse_superscalar("eta xi") == -(xi * eta)
    assert parse_superscalar("(1 + y)/x") == (1 + y) * x ** -1
    assert parse_superscalar("x^-2") == x ** -2
    assert parse_superscalar("-3/4") == parse_superscalar("-(3/4)")

    print("✓ Parser arithmetic test passed")


def test_indexed_names():
    """Digits or an underscore index; parity from the odd name list"""
    from superfrieze.core.expression import parse_identifier, parse_superscalar
    from superfrieze.core.grassmann import Parity, even, generator, odd

    assert parse_identifier('a1') == even('a', 1)
    assert parse_identifier('b12') == odd('b', 12)
    assert parse_identifier('x_-1') == even('x', -1)
    assert parse_identifier('theta').parity == Parity.ODD
    assert parse_superscalar("a1 a2 - 2 + b1 b2") == (
        generator(even('a', 1)) * generator(even('a', 2)) - 2
        + generator(odd('b', 1)) * generator(odd('b', 2)))

    print("✓ Indexed name test passed")


@pytest.mark.parametrize('text,position,reason', [
    ("2.5", 1, "decimal"),
    ("sin(x)", 0, "function calls"),
    ("x^100", 2, "exponent larger"),
    ("x^y", 2, "exponent must be an integer"),
    ("(x + 1", 0, "unclosed"),
    ("x + 1)", 5, "unbalanced"),
    ("x +", 3, "unexpected end"),
    ("* x", 0, "unexpected '*'"),
    ("x $ y", 2, "unexpected character"),
    ("1/0", 1, "division by zero"),
    ("x/y + 1/0", 7, "division by zero"),
    ("(x + 2)/(y - y)", 7, "division by zero"),
    ("x + 0^-1", 5, "division by zero"),
])
def test_malformed_input(text, position, reason):
    """Errors report a 0-based position and a reason"""
    from superfrieze.core.expression import parse_superscalar
    from superfrieze.utils.errors import ExpressionError

    with pytest.raises(ExpressionError) as info:
        parse_superscalar(text)
    assert info.value.position == position
    assert reason in info.value.reason


def test_list_positions_refer_to_the_whole_text():
    from superfrieze.core.expression import parse_scalar_list
    from superfrieze.utils.errors import ExpressionError

    assert len(parse_scalar_list("1, x, xi")) == 3
    with pytest.raises(ExpressionError) as info:
        parse_scalar_list("a1, 2.5")
    assert info.value.position == 5
    assert "position 5" in str(info.value)

    print("✓ List position test passed")


def test_division_by_non_monomial():
    from superfrieze.core.expression import parse_superscalar
    from superfrieze.utils.errors import NotInvertible

    with pytest.raises(NotInvertible):
        parse_superscalar("1/(1 + x)")

    print("✓ Non-monomial division test passed")


def test_coerce_scalar():
    from superfrieze.core.expression import coerce_scalar, coerce_scalars
    from superfrieze.core.grassmann import constant
    from superfrieze.utils.errors import ExpressionError

    x, _, xi, _ = _gens()
    assert coerce_scalar(3) == constant(3)
    assert coerce_scalar("x") == x
    assert coerce_scalar((x * xi).to_dict()) == x * xi
    assert coerce_scalars("1, xi") == [constant(1), xi]
    assert coerce_scalars([1, "xi"]) == [constant(1), xi]
    with pytest.raises(ExpressionError):
        coerce_scalar(True)
    with pytest.raises(ExpressionError):
        coerce_scalar(1.5)

    print("✓ Coercion test passed")


if __name__ == '__main__':
    print("Running superfrieze expression tests...\n")
    test_arithmetic_and_juxtaposition()
    test_indexed_names()
    test_list_positions_refer_to_the_whole_text()
    test_division_by_non_monomial()
    test_coerce_scalar()
    print("\n✓ All tests passed!")
