"""Equations of the Hill supervariety for small periods

The published forms for n = 3, 4, 5, 6 are written in the generators
a_1..a_n (even) and b_1..b_n (odd), with b_{n+1} = -b_1 wherever an
equation wraps around the period.  They are checked against the raw
monodromy entries by substituting random points of the variety.
"""

import random
from typing import Any, Dict, List, Optional, Sequence

from .frieze import random_closed_frieze
from .grassmann import (
    ONE, ZERO, SuperScalar, constant, even, generator, odd, substitute, total_sum,
)
from .hill import HillCoefficients, is_hill, supervariety_equations
from ..utils.config import config
from ..utils.errors import DimensionMismatch, NotHill
from ..utils.logger import logger

PUBLISHED = (3, 4, 5, 6)


def _symbols(n: int):
    a = {k: generator(even('a', k)) for k in range(1, n + 1)}
    b = {k: generator(odd('b', k)) for k in range(1, n + 1)}
    return a, b


def _a(a: Dict[int, SuperScalar], k: int, n: int) -> SuperScalar:
    return a[(k - 1) % n + 1]


def _b(b: Dict[int, SuperScalar], k: int, n: int) -> SuperScalar:
    """b_k extended antiperiodically"""
    q, r = divmod(k - 1, n)
    value = b[r + 1]
    return -value if q % 2 else value


def _pair(a, b, k: int, n: int) -> SuperScalar:
    """a_k a_{k+1} - 1 + b_k b_{k+1}"""
    return _a(a, k, n) * _a(a, k + 1, n) - 1 + _b(b, k, n) * _b(b, k + 1, n)


def linear_system(n: int) -> List[List[SuperScalar]]:
    """Matrix of the odd linear system acting on (-b_n, b_1, ..., b_{n-1})

    For n = 6 the entries a_i a_{i+1} - 1 carry their b_i b_{i+1} term;
    without it the rows only vanish modulo triple products of the b.
    """
    if n not in PUBLISHED:
        raise DimensionMismatch(f"No published equations for n={n}; available: {PUBLISHED}")
    a, b = _symbols(n)
    one, zero = ONE, ZERO
    if n == 3:
        return [[zero, one, one], [-one, zero, one], [-one, -one, zero]]
    if n == 4:
        return [[zero, one, a[1], one],
                [-one, zero, one, a[2]],
                [-a[1], -one, zero, one],
                [-one, -a[2], -one, zero]]
    if n == 5:
        return [[zero, one, a[1], a[4], one],
                [-one, zero, one, a[2], a[5]],
                [-a[1], -one, zero, one, a[3]],
                [-a[4], -a[2], -one, zero, one],
                [-one, -a[5], -a[3], -one, zero]]
    p = {k: _pair(a, b, k, 6) for k in range(1, 7)}
    return [[zero, one, a[1], p[1], a[5], one],
            [-one, zero, one, a[2], p[2], a[6]],
            [-a[1], -one, zero, one, a[3], p[3]],
            [-p[4], -a[2], -one, zero, one, a[4]],
            [-a[5], -p[5], -a[3], -one, zero, one],
            [-one, -a[6], -p[6], -a[4], -one, zero]]


def _period_six_even(a, b, k: int) -> SuperScalar:
    """a_k + a_{k+2} + a_{k+4} minus the supercontinuant of a_{k+2}, a_{k+3}, a_{k+4}"""
    a2, a3, a4 = (_a(a, k + d, 6) for d in (2, 3, 4))
    b2, b3, b4 = (_b(b, k + d, 6) for d in (2, 3, 4))
    return (_a(a, k, 6) + a2 + a4 - a2 * a3 * a4
            - a2 * b3 * b4 - a4 * b2 * b3 - b2 * b4)


def published_equations(n: int) -> List[SuperScalar]:
    """Even equations followed by the rows of the odd linear system

    Raises:
        DimensionMismatch: for n outside 3, 4, 5, 6
    """
    matrix = linear_system(n)
    a, b = _symbols(n)
    if n == 3:
        even_eqs = [a[k] - 1 for k in range(1, 4)]
    elif n == 4:
        even_eqs = [a[k] * a[k % 4 + 1] - 2 + _b(b, k, 4) * _b(b, k + 1, 4)
                    for k in range(1, 5)]
    elif n == 5:
        even_eqs = [a[k] * a[k % 5 + 1] - a[(k + 2) % 5 + 1] - 1 + _b(b, k, 5) * _b(b, k + 1, 5)
                    for k in range(1, 6)]
    else:
        even_eqs = [_period_six_even(a, b, k) for k in range(1, 7)]
    vector = [-b[n]] + [b[k] for k in range(1, n)]
    odd_eqs = [total_sum(entry * x for entry, x in zip(row, vector)) for row in matrix]
    return even_eqs + odd_eqs


def random_hill_point(n: int, rng: Optional[random.Random] = None) -> HillCoefficients:
    """Coefficients a_1..a_n, beta_1..beta_n of a random point of the variety

    For n >= 4 they are the first rows of a random closed frieze of width
    n - 3 over n - 2 odd generators, so products of three beta survive;
    for n = 3 every point is a_i = 1, beta_i = (-1)^i beta.
    """
    rng = rng if rng is not None else random.Random(config.get('random.seed', 2024))
    if n == 3:
        beta = constant(rng.randint(1, 9)) * generator(odd('theta', 1))
        return HillCoefficients((ONE, ONE, ONE), (-beta, beta, -beta), 1)
    F = random_closed_frieze(n - 3, rng, odd_generators=max(2, n - 2))
    c = F.first_rows()
    idx = range(1, n + 1)
    return HillCoefficients(tuple(c.a_at(k) for k in idx), tuple(c.beta_at(k) for k in idx), 1)


def _assignment(point: HillCoefficients) -> Dict[Any, SuperScalar]:
    values = {even('a', k): point.a_at(k) for k in range(1, point.n + 1)}
    values.update({odd('b', k): point.beta_at(k) for k in range(1, point.n + 1)})
    return values


def _all_vanish(equations: Sequence[SuperScalar], point: HillCoefficients) -> bool:
    assignment = _assignment(point)
    return all(not substitute(eq, assignment) for eq in equations)


def verify_published(n: int, seed: Optional[int] = None, samples: Optional[int] = None) -> Dict[str, Any]:
    """Substitute random points into the raw and the published equations

    Returns:
        Dict with the sample count and whether each equation set vanished
        on every point; 'verified' is true iff both did
    """
    seed = config.get('random.seed', 2024) if seed is None else seed
    samples = config.get('random.samples', 3) if samples is None else samples
    rng = random.Random(seed)
    raw = supervariety_equations(n, 1)
    published = published_equations(n)
    raw_ok = published_ok = True
    for _ in range(samples):
        point = random_hill_point(n, rng)
        if not is_hill(point):
            raise NotHill(f"Random point for n={n} is off the variety")
        raw_ok = raw_ok and _all_vanish(raw, point)
        published_ok = published_ok and _all_vanish(published, point)
    logger.info(f"Checked published equations for n={n} on {samples} points: "
                f"raw={raw_ok}, published={published_ok}")
    return {
        'n': n,
        'samples': samples,
        'seed': seed,
        'raw_vanish': raw_ok,
        'published_vanish': published_ok,
        'verified': raw_ok and published_ok,
    }
