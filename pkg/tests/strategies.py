"""Hypothesis strategies for supercommutative scalars"""

import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from hypothesis import strategies as st

from superfrieze.core.grassmann import constant, even, generator, odd, product

EVEN_GENERATORS = (even('x', 1), even('x', 2), even('y'))
ODD_GENERATORS = tuple(odd('xi', k) for k in range(1, 5))

coefficients = st.integers(min_value=-3, max_value=3).filter(bool)


@st.composite
def monomials(draw, odd_counts=(0, 1, 2, 3), with_even=True):
    """A signed monomial with small exponents and the given odd degrees"""
    k = draw(st.sampled_from(odd_counts))
    odds = draw(st.lists(st.sampled_from(ODD_GENERATORS), unique=True, min_size=k, max_size=k))
    value = constant(draw(coefficients))
    if with_even:
        for gen in EVEN_GENERATORS:
            value = value * generator(gen) ** draw(st.integers(min_value=0, max_value=2))
    return value * product(generator(g) for g in odds)


@st.composite
def scalars(draw, odd_counts=(0, 1, 2, 3), max_terms=3):
    terms = draw(st.lists(monomials(odd_counts), min_size=0, max_size=max_terms))
    total = constant(0)
    for term in terms:
        total = total + term
    return total


def even_scalars(max_terms=3):
    return scalars((0, 2), max_terms)


def odd_scalars(max_terms=3):
    return scalars((1, 3), max_terms)


@st.composite
def units(draw):
    """Monomial body plus a nilpotent soul: always invertible"""
    head = draw(monomials((0,)))
    tail = draw(scalars((1, 2), max_terms=2))
    return head + tail


@st.composite
def nilpotent_evens(draw):
    """Even scalars with zero body"""
    return draw(scalars((2,), max_terms=2))


@st.composite
def constant_units(draw):
    """Nonzero integer body plus an even nilpotent soul"""
    return constant(draw(coefficients)) + draw(nilpotent_evens())
