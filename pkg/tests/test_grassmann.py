"""Tests for supercommutative scalar arithmetic"""

import sys
import os

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest
from hypothesis import given, settings

from tests.strategies import (
    EVEN_GENERATORS, ODD_GENERATORS, constant_units, even_scalars, odd_scalars, scalars, units,
)


@settings(max_examples=200, derandomize=True)
@given(odd_scalars(), odd_scalars())
def test_odd_elements_anticommute(u, v):
    """Odd elements anticommute and square to zero"""
    assert u * v == -(v * u)
    assert (u * u).is_zero


@settings(max_examples=200, derandomize=True)
@given(even_scalars(), scalars())
def test_even_elements_are_central(u, v):
    """Even elements commute with everything"""
    assert u * v == v * u


@settings(max_examples=200, derandomize=True)
@given(scalars(), scalars(), scalars())
def test_ring_axioms(u, v, w):
    """Multiplication is associative and distributes over addition"""
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w


@settings(max_examples=200, derandomize=True)
@given(units())
def test_invert_is_two_sided(u):
    """Elements with a monomial body have a two-sided inverse"""
    from superfrieze.core.grassmann import ONE, invert

    inv = invert(u)
    assert u * inv == ONE
    assert inv * u == ONE


@settings(max_examples=200, derandomize=True)
@given(scalars(), scalars())
def test_body_is_multiplicative(u, v):
    """Dropping odd generators is a ring homomorphism"""
    from superfrieze.core.grassmann import body

    assert body(u * v) == body(u) * body(v)
    assert body(u + v) == body(u) + body(v)


@settings(max_examples=200, derandomize=True)
@given(scalars(), scalars(), constant_units(), odd_scalars(max_terms=2))
def test_substitute_is_a_homomorphism(u, v, x_value, xi_value):
    """Substitution respects products once parities match"""
    from superfrieze.core.grassmann import substitute

    assignment = {EVEN_GENERATORS[0]: x_value, ODD_GENERATORS[3]: xi_value}
    assert substitute(u * v, assignment) == substitute(u, assignment) * substitute(v, assignment)


def test_generators_and_parity():
    """Generators carry their parity; mixed sums have none"""
    from superfrieze.core.grassmann import (
        Parity, ZERO, even, generator, has_parity, odd, parity_of,
    )

    x = generator(even('x'))
    xi = generator(odd('xi'))
    assert parity_of(x) == Parity.EVEN
    assert parity_of(xi) == Parity.ODD
    assert parity_of(x + xi) == Parity.MIXED
    assert has_parity(ZERO, Parity.ODD)
    assert has_parity(ZERO, Parity.EVEN)
    assert (xi * xi).is_zero

    print("✓ Generator parity test passed")


def test_koszul_sign_on_three_generators():
    """Reordering odd generators picks up the permutation sign"""
    from superfrieze.core.grassmann import generator, odd

    xi, eta, zeta = (generator(odd(name)) for name in ('xi', 'eta', 'zeta'))
    assert zeta * eta * xi == -(xi * eta * zeta)
    assert eta * xi * zeta == -(xi * eta * zeta)
    assert eta * zeta * xi == xi * eta * zeta

    print("✓ Koszul sign test passed")


def test_invert_rejects_non_monomial_body():
    """1 + x has no inverse in the Laurent ring"""
    from superfrieze.core.grassmann import ONE, ZERO, even, generator, invert, odd
    from superfrieze.utils.errors import NotInvertible

    x = generator(even('x'))
    xi = generator(odd('xi'))
    with pytest.raises(NotInvertible):
        invert(ONE + x)
    with pytest.raises(NotInvertible):
        invert(ZERO)
    with pytest.raises(NotInvertible):
        invert(xi)

    inv = invert(x + xi * generator(odd('eta')))
    assert inv == x ** -1 - x ** -2 * xi * generator(odd('eta'))

    print("✓ Invert rejection test passed")


def test_require_parity():
    """Parity checks name the offending value"""
    from superfrieze.core.grassmann import Parity, even, generator, odd, require_parity
    from superfrieze.utils.errors import ParityMismatch

    xi = generator(odd('xi'))
    assert require_parity(xi, Parity.ODD) == xi
    with pytest.raises(ParityMismatch):
        require_parity(generator(even('x')) + xi, Parity.EVEN, 'a_1')

    print("✓ Parity requirement test passed")


def test_constants_hash_like_numbers():
    """Scalars equal to a number share its hash and its dict slot"""
    from fractions import Fraction
    from superfrieze.core.grassmann import ZERO, constant, even, generator

    assert constant(1) == 1 and hash(constant(1)) == hash(1)
    assert hash(constant(Fraction(-3, 4))) == hash(Fraction(-3, 4))
    assert ZERO == 0 and hash(ZERO) == hash(0)
    assert {1: 'one'}[constant(1)] == 'one'
    assert len({constant(2), 2, Fraction(2)}) == 1
    x = generator(even('x'))
    assert hash(x * x ** -1) == hash(1)

    print("✓ Constant hash test passed")


def test_json_form():
    """Terms serialise in canonical order with string coefficients"""
    from fractions import Fraction
    from superfrieze.core.grassmann import SuperScalar, constant, even, generator, odd

    x = generator(even('x', 1))
    xi, eta = generator(odd('xi')), generator(odd('eta'))
    u = Fraction(3, 2) * x * x * xi - eta + constant(2)
    data = u.to_dict()
    assert data[0] == {'coeff': '2', 'even': {}, 'odd': []}
    assert SuperScalar.from_dict(data) == u
    assert str(u).startswith('2')
    assert '3/2*x1^2*xi' in str(u)

    print("✓ JSON form test passed")


def test_sympy_conversion():
    """Even parts map to commuting symbols"""
    import sympy
    from superfrieze.core.grassmann import even, generator

    x, y = generator(even('x')), generator(even('y'))
    expr = ((x + y) * (x - y)).to_sympy()
    X, Y = sympy.symbols('x y')
    assert sympy.expand(expr - (X ** 2 - Y ** 2)) == 0

    print("✓ SymPy conversion test passed")


if __name__ == '__main__':
    print("Running superfrieze grassmann tests...\n")
    test_generators_and_parity()
    test_koszul_sign_on_three_generators()
    test_invert_rejects_non_monomial_body()
    test_require_parity()
    test_constants_hash_like_numbers()
    test_json_form()
    test_sympy_conversion()
    print("\n✓ All tests passed!")
