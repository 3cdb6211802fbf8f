"""Discrete super Hill equations: shift operators, transfer matrices, monodromy"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .grassmann import (
    ONE, ZERO, GeneratorId, Parity, Scalarish, SuperScalar, as_scalar, body,
    even, generator, mul, odd, parity_of, require_parity, substitute,
)
from .supermatrix import SuperMatrix, diagonal, mat_mul, mat_vec
from ..utils.config import config
from ..utils.errors import DimensionMismatch, InsufficientSupport, NotNilpotent, ParityMismatch
from ..utils.logger import logger

HILL_MATRIX = diagonal([-1, -1, 1], (2, 1))


@dataclass(frozen=True)
class SuperSequencePair:
    """The sequence V + xi W on the window [start, start + len(v) - 1]

    xi is a formal odd symbol; it lives in the pairing of v and w and never
    becomes a ring generator.
    """

    start: int
    v: Tuple[SuperScalar, ...]
    w: Tuple[SuperScalar, ...]

    def __post_init__(self):
        if len(self.v) != len(self.w):
            raise DimensionMismatch("v and w must cover the same window")
        object.__setattr__(self, 'v', tuple(as_scalar(x) for x in self.v))
        object.__setattr__(self, 'w', tuple(as_scalar(x) for x in self.w))

    @classmethod
    def from_functions(cls, lo: int, hi: int,
                       v: Callable[[int], SuperScalar],
                       w: Callable[[int], SuperScalar]) -> 'SuperSequencePair':
        idx = range(lo, hi + 1)
        return cls(lo, tuple(v(i) for i in idx), tuple(w(i) for i in idx))

    @classmethod
    def symbolic(cls, lo: int, hi: int, v_name: str = 'V', w_name: str = 'W') -> 'SuperSequencePair':
        """Free even generators V_i and free odd generators W_i"""
        return cls.from_functions(lo, hi,
                                  lambda i: generator(even(v_name, i)),
                                  lambda i: generator(odd(w_name, i)))

    @property
    def lo(self) -> int:
        return self.start

    @property
    def hi(self) -> int:
        return self.start + len(self.v) - 1

    @property
    def support(self) -> range:
        return range(self.lo, self.hi + 1)

    def __len__(self) -> int:
        return len(self.v)

    def _check(self, i: int):
        if not self.lo <= i <= self.hi:
            raise InsufficientSupport(f"Index {i} outside support [{self.lo}, {self.hi}]")

    def v_at(self, i: int) -> SuperScalar:
        self._check(i)
        return self.v[i - self.start]

    def w_at(self, i: int) -> SuperScalar:
        self._check(i)
        return self.w[i - self.start]

    def restrict(self, lo: int, hi: int) -> 'SuperSequencePair':
        if lo < self.lo or hi > self.hi:
            raise InsufficientSupport(
                f"Window [{lo}, {hi}] not inside support [{self.lo}, {self.hi}]")
        return SuperSequencePair(lo, self.v[lo - self.start:hi - self.start + 1],
                                 self.w[lo - self.start:hi - self.start + 1])

    def negate(self) -> 'SuperSequencePair':
        return SuperSequencePair(self.start, tuple(-x for x in self.v), tuple(-x for x in self.w))

    def plus(self, other: 'SuperSequencePair') -> 'SuperSequencePair':
        """Termwise sum on the common window"""
        a, b = overlap(self, other)
        return SuperSequencePair(a.start, tuple(x + y for x, y in zip(a.v, b.v)),
                                 tuple(x + y for x, y in zip(a.w, b.w)))

    def scaled(self, factor: Scalarish) -> 'SuperSequencePair':
        """Left multiplication by an even scalar"""
        factor = require_parity(as_scalar(factor), Parity.EVEN, 'scale factor')
        return SuperSequencePair(self.start, tuple(factor * x for x in self.v),
                                 tuple(factor * x for x in self.w))

    def is_zero(self) -> bool:
        return not any(self.v) and not any(self.w)

    def substitute(self, assignment: Mapping[GeneratorId, Scalarish]) -> 'SuperSequencePair':
        return SuperSequencePair(self.start,
                                 tuple(substitute(x, assignment) for x in self.v),
                                 tuple(substitute(x, assignment) for x in self.w))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'start': self.start,
            'v': [x.to_dict() for x in self.v],
            'w': [x.to_dict() for x in self.w],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'SuperSequencePair':
        return cls(int(data['start']),
                   tuple(SuperScalar.from_dict(x) for x in data['v']),
                   tuple(SuperScalar.from_dict(x) for x in data['w']))


def overlap(s: SuperSequencePair, t: SuperSequencePair) -> Tuple[SuperSequencePair, SuperSequencePair]:
    """Both pairs restricted to their common window"""
    lo, hi = max(s.lo, t.lo), min(s.hi, t.hi)
    if lo > hi:
        raise InsufficientSupport("Sequences have disjoint supports")
    return s.restrict(lo, hi), t.restrict(lo, hi)


@dataclass(frozen=True)
class HillCoefficients:
    """Coefficients a_i (even) and beta_i (odd) of one period

    a[0] and beta[0] sit at index ``start``.  Outside the period the
    coefficients repeat with a_{i+n} = a_i and beta_{i+n} = -beta_i.
    """

    a: Tuple[SuperScalar, ...]
    beta: Tuple[SuperScalar, ...]
    start: int = 1

    def __post_init__(self):
        if len(self.a) != len(self.beta):
            raise DimensionMismatch("a and beta must have the same length")
        if len(self.a) < 3:
            raise DimensionMismatch(f"Period must be at least 3, got {len(self.a)}")
        a = tuple(require_parity(as_scalar(x), Parity.EVEN, f"a[{k}]") for k, x in enumerate(self.a))
        beta = tuple(require_parity(as_scalar(x), Parity.ODD, f"beta[{k}]")
                     for k, x in enumerate(self.beta))
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'beta', beta)

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def symbolic(cls, n: int, start: int = 1, a_name: str = 'a',
                 beta_name: str = 'b') -> 'HillCoefficients':
        idx = range(start, start + n)
        return cls(tuple(generator(even(a_name, i)) for i in idx),
                   tuple(generator(odd(beta_name, i)) for i in idx), start)

    def coefficient(self, i: int) -> Tuple[SuperScalar, SuperScalar]:
        """(a_i, beta_i) for any integer i"""
        q, r = divmod(i - self.start, self.n)
        beta = self.beta[r]
        return self.a[r], (-beta if q % 2 else beta)

    def a_at(self, i: int) -> SuperScalar:
        return self.coefficient(i)[0]

    def beta_at(self, i: int) -> SuperScalar:
        return self.coefficient(i)[1]

    def shifted(self, k: int) -> 'HillCoefficients':
        """Coefficients c' with c'(i) = c(i + k), same start"""
        idx = range(self.start + k, self.start + k + self.n)
        return HillCoefficients(tuple(self.a_at(i) for i in idx),
                                tuple(self.beta_at(i) for i in idx), self.start)

    def substitute(self, assignment: Mapping[GeneratorId, Scalarish]) -> 'HillCoefficients':
        return HillCoefficients(tuple(substitute(x, assignment) for x in self.a),
                                tuple(substitute(x, assignment) for x in self.beta),
                                self.start)

    def classical(self) -> 'HillCoefficients':
        return HillCoefficients(tuple(body(x) for x in self.a),
                                tuple(ZERO for _ in self.beta), self.start)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'start': self.start,
            'a': [x.to_dict() for x in self.a],
            'beta': [x.to_dict() for x in self.beta],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'HillCoefficients':
        coeffs = cls(tuple(SuperScalar.from_dict(x) for x in data['a']),
                     tuple(SuperScalar.from_dict(x) for x in data['beta']),
                     int(data.get('start', 1)))
        if 'n' in data and int(data['n']) != coeffs.n:
            raise DimensionMismatch(f"Declared n={data['n']} but {coeffs.n} coefficients given")
        return coeffs


def transfer_matrix(a: Scalarish, beta: Scalarish) -> SuperMatrix:
    """A = ((0, 1, 0), (-1, a, -beta), (0, beta, 1)) with block (2, 1)

    Raises:
        ParityMismatch: if a is not even or beta is not odd
    """
    a = require_parity(as_scalar(a), Parity.EVEN, 'a')
    beta = require_parity(as_scalar(beta), Parity.ODD, 'beta')
    return SuperMatrix([[ZERO, ONE, ZERO], [-ONE, a, -beta], [ZERO, beta, ONE]], (2, 1))


def transfer_inverse(a: Scalarish, beta: Scalarish) -> SuperMatrix:
    """Closed form of the inverse transfer matrix"""
    a = require_parity(as_scalar(a), Parity.EVEN, 'a')
    beta = require_parity(as_scalar(beta), Parity.ODD, 'beta')
    return SuperMatrix([[a, -ONE, -beta], [ONE, ZERO, ZERO], [-beta, ZERO, ONE]], (2, 1))


class HillSystem:
    """Coefficients together with their transfer matrices over two periods"""

    def __init__(self, coeffs: HillCoefficients, monodromy_base: Optional[int] = None):
        self.coeffs = coeffs
        self.monodromy_base = (config.get('hill.monodromy_base', 1)
                               if monodromy_base is None else monodromy_base)
        self._transfer: Dict[int, SuperMatrix] = {
            i: transfer_matrix(*coeffs.coefficient(i))
            for i in range(coeffs.start, coeffs.start + 2 * coeffs.n)
        }
        logger.debug(f"Built {len(self._transfer)} transfer matrices for n={coeffs.n}")

    @property
    def n(self) -> int:
        return self.coeffs.n

    def transfer(self, i: int) -> SuperMatrix:
        cached = self._transfer.get(i)
        if cached is None:
            cached = transfer_matrix(*self.coeffs.coefficient(i))
        return cached

    def to_dict(self) -> Dict[str, Any]:
        return {'coeffs': self.coeffs.to_dict(), 'monodromy_base': self.monodromy_base}


def monodromy(sys: HillSystem, i: Optional[int] = None) -> SuperMatrix:
    """M_i = A_{i+n-1} ... A_{i+1} A_i"""
    if i is None:
        i = sys.monodromy_base
    result = sys.transfer(i)
    for k in range(i + 1, i + sys.n):
        result = mat_mul(sys.transfer(k), result)
    return result


def check_hill_condition(M: SuperMatrix) -> bool:
    """True iff M is exactly diag(-1, -1, 1)"""
    return M.shape == (3, 3) and all(
        M[r, c] == HILL_MATRIX[r, c] for r in range(3) for c in range(3))


def is_hill(coeffs: HillCoefficients) -> bool:
    return check_hill_condition(monodromy(HillSystem(coeffs)))


def supervariety_equations(n: int, start: int = 1) -> List[SuperScalar]:
    """Nonzero entries of M - diag(-1, -1, 1) for fully symbolic coefficients

    Generators are a_start..a_{start+n-1} (even) and b_start.. (odd).
    Entries are listed row by row.
    """
    if n < 3:
        raise DimensionMismatch(f"Period must be at least 3, got {n}")
    M = monodromy(HillSystem(HillCoefficients.symbolic(n, start)), start)
    equations = [M[r, c] - HILL_MATRIX[r, c] for r in range(3) for c in range(3)]
    return [eq for eq in equations if eq]


def shift_T(s: SuperSequencePair) -> SuperSequencePair:
    """(T s)_i = s_{i-1}"""
    return SuperSequencePair(s.start + 1, s.v, s.w)


def super_shift(s: SuperSequencePair) -> SuperSequencePair:
    """Odd square root of -T: (V + xi W)_i -> W_i - xi V_{i-1}"""
    return SuperSequencePair.from_functions(
        s.lo + 1, s.hi, s.w_at, lambda i: -s.v_at(i - 1))


def parity_inversion(s: SuperSequencePair) -> SuperSequencePair:
    """(V + xi W)_i -> W_i + xi V_i"""
    return SuperSequencePair(s.start, s.w, s.v)


def group_action(k: int, lam: Scalarish, s: SuperSequencePair) -> SuperSequencePair:
    """Action of the supergroup element (k, lam) on a super-sequence

    Output at i is V_{i+k} - lam W_{i+k} + xi (lam V_{i+k-1} + W_{i+k}).

    Raises:
        ParityMismatch: if lam is not odd
    """
    lam = require_parity(as_scalar(lam), Parity.ODD, 'lambda')
    return SuperSequencePair.from_functions(
        s.lo - k + 1, s.hi - k,
        lambda i: s.v_at(i + k) - lam * s.w_at(i + k),
        lambda i: lam * s.v_at(i + k - 1) + s.w_at(i + k))


@dataclass(frozen=True)
class SuperTranslation:
    """Supergroup element (shift + eps, lam) with eps an even nilpotent

    The integer part acts through group_action, the nilpotent part through
    the terminating series exp(eps T).
    """

    shift: int
    eps: SuperScalar = field(default=ZERO)
    lam: SuperScalar = field(default=ZERO)

    def __post_init__(self):
        eps = require_parity(as_scalar(self.eps), Parity.EVEN, 'eps')
        if body(eps):
            raise NotNilpotent(f"Translation parameter {eps} has a nonzero body")
        object.__setattr__(self, 'eps', eps)
        object.__setattr__(self, 'lam', require_parity(as_scalar(self.lam), Parity.ODD, 'lambda'))

    def compose(self, other: 'SuperTranslation') -> 'SuperTranslation':
        """(r, lam)(s, mu) = (r + s + lam mu, lam + mu): act by self, then other"""
        return SuperTranslation(self.shift + other.shift,
                                self.eps + other.eps + mul(self.lam, other.lam),
                                self.lam + other.lam)

    def _exp_terms(self) -> List[SuperScalar]:
        terms = [ONE]
        power = ONE
        k = 1
        while True:
            power = mul(power, self.eps)
            if not power:
                return terms
            terms.append(power * Fraction(1, math.factorial(k)))
            k += 1

    def act(self, s: SuperSequencePair) -> SuperSequencePair:
        moved = group_action(self.shift, self.lam, s)
        terms = self._exp_terms()
        depth = len(terms) - 1
        if moved.lo + depth > moved.hi:
            raise InsufficientSupport("Sequence too short for the nilpotent translation")

        def combine(getter):
            def value(i: int) -> SuperScalar:
                total = ZERO
                for k, coeff in enumerate(terms):
                    total = total + coeff * getter(i - k)
                return total
            return value

        return SuperSequencePair.from_functions(
            moved.lo + depth, moved.hi, combine(moved.v_at), combine(moved.w_at))


def multiply_by_potential(p: Callable[[int], SuperScalar], q: Callable[[int], SuperScalar],
                          s: SuperSequencePair) -> SuperSequencePair:
    """Pointwise (P + xi Q)(X + xi Y) = P X + xi ((-1)^|P| P Y + Q X)

    Raises:
        ParityMismatch: if some P_i is not homogeneous
    """
    def w_value(i: int) -> SuperScalar:
        p_i = p(i)
        parity = parity_of(p_i)
        if parity == Parity.MIXED:
            raise ParityMismatch(f"Potential term P_{i} is not homogeneous: {p_i}")
        py = p_i * s.w_at(i)
        return (-py if parity == Parity.ODD else py) + q(i) * s.v_at(i)

    return SuperSequencePair.from_functions(
        s.lo, s.hi, lambda i: p(i) * s.v_at(i), w_value)


def apply_sturm_liouville(c: HillCoefficients, s: SuperSequencePair) -> SuperSequencePair:
    """L(V + xi W)_i = W_i - W_{i-1} - beta_i V_{i-1}
                     + xi (V_i - a_i V_{i-1} + V_{i-2} + beta_i W_{i-1})

    Raises:
        InsufficientSupport: if s covers fewer than three indices
    """
    if len(s) < 3:
        raise InsufficientSupport("Sturm-Liouville operator needs at least three points")

    def v_value(i: int) -> SuperScalar:
        return s.w_at(i) - s.w_at(i - 1) - c.beta_at(i) * s.v_at(i - 1)

    def w_value(i: int) -> SuperScalar:
        a, beta = c.coefficient(i)
        return s.v_at(i) - a * s.v_at(i - 1) + s.v_at(i - 2) + beta * s.w_at(i - 1)

    return SuperSequencePair.from_functions(s.lo + 2, s.hi, v_value, w_value)


def apply_sturm_liouville_operator_form(c: HillCoefficients, s: SuperSequencePair) -> SuperSequencePair:
    """Same operator assembled as T^3 + U T^2 + Pi with U_i = beta_i + xi a_i

    Chaining the odd shift costs one index per application, so the result
    covers [lo + 3, hi].
    """
    if len(s) < 4:
        raise InsufficientSupport("Operator form needs at least four points")
    t2 = super_shift(super_shift(s))
    t3 = super_shift(t2)
    potential = multiply_by_potential(c.beta_at, c.a_at, t2)
    return t3.plus(potential).plus(parity_inversion(s))


def propagate(c: HillCoefficients, init: Sequence[Scalarish], start: int, steps: int) -> SuperSequencePair:
    """Iterate (V_{i-1}, V_i, W_i) = A_i (V_{i-2}, V_{i-1}, W_{i-1})

    init is (V_{start-2}, V_{start-1}, W_{start-1}); the result covers
    [start - 2, start - 1 + steps], with W_{start-2} recovered from the
    odd equation at start - 1.

    Raises:
        ParityMismatch: if init is not (even, even, odd)
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    v_prev2, v_prev, w_prev = (as_scalar(x) for x in init)
    require_parity(v_prev2, Parity.EVEN, 'V_{i-2}')
    require_parity(v_prev, Parity.EVEN, 'V_{i-1}')
    require_parity(w_prev, Parity.ODD, 'W_{i-1}')

    v: List[SuperScalar] = [v_prev2, v_prev]
    w: List[SuperScalar] = [w_prev - c.beta_at(start - 1) * v_prev2, w_prev]
    state = (v_prev2, v_prev, w_prev)
    for i in range(start, start + steps):
        a, beta = c.coefficient(i)
        state = mat_vec(transfer_matrix(a, beta), state)
        v.append(state[1])
        w.append(state[2])
    return SuperSequencePair(start - 2, tuple(v), tuple(w))


@dataclass(frozen=True)
class FifthHalfOperator:
    """Periodic coefficients of the order 5/2 difference operator

    F_i = a'_i - 1 + xi (beta_i + beta'_i),  G_i = beta'_i + xi a_i.
    """

    a: Tuple[SuperScalar, ...]
    a_prime: Tuple[SuperScalar, ...]
    beta: Tuple[SuperScalar, ...]
    beta_prime: Tuple[SuperScalar, ...]
    start: int = 1

    def __post_init__(self):
        n = len(self.a)
        if n == 0 or any(len(x) != n for x in (self.a_prime, self.beta, self.beta_prime)):
            raise DimensionMismatch("All coefficient lists must have the same positive length")
        for name, values, parity in (('a', self.a, Parity.EVEN), ('a_prime', self.a_prime, Parity.EVEN),
                                     ('beta', self.beta, Parity.ODD),
                                     ('beta_prime', self.beta_prime, Parity.ODD)):
            object.__setattr__(self, name, tuple(
                require_parity(as_scalar(x), parity, f"{name}[{k}]") for k, x in enumerate(values)))

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def symbolic(cls, n: int, start: int = 1) -> 'FifthHalfOperator':
        idx = range(start, start + n)
        return cls(tuple(generator(even('a', i)) for i in idx),
                   tuple(generator(even('c', i)) for i in idx),
                   tuple(generator(odd('b', i)) for i in idx),
                   tuple(generator(odd('nu', i)) for i in idx), start)

    def coefficient(self, i: int) -> Tuple[SuperScalar, SuperScalar, SuperScalar, SuperScalar]:
        """(a_i, a'_i, beta_i, beta'_i), extended periodically"""
        r = (i - self.start) % self.n
        return self.a[r], self.a_prime[r], self.beta[r], self.beta_prime[r]

    def step_matrix(self, i: int) -> SuperMatrix:
        a, a_prime, beta, beta_prime = self.coefficient(i)
        return SuperMatrix([
            [ZERO, ONE, ZERO, ZERO, ZERO],
            [ZERO, ZERO, ONE, ZERO, ZERO],
            [ONE, -a_prime, a, ZERO, beta],
            [ZERO, ZERO, ZERO, ZERO, ONE],
            [ZERO, ZERO, beta_prime, -ONE, a_prime - 1],
        ], (3, 2))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'start': self.start,
            'a': [x.to_dict() for x in self.a],
            'a_prime': [x.to_dict() for x in self.a_prime],
            'beta': [x.to_dict() for x in self.beta],
            'beta_prime': [x.to_dict() for x in self.beta_prime],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'FifthHalfOperator':
        def load(key):
            return tuple(SuperScalar.from_dict(x) for x in data[key])
        return cls(load('a'), load('a_prime'), load('beta'), load('beta_prime'),
                   int(data.get('start', 1)))


def propagate_5_2(op: FifthHalfOperator, init: Sequence[Scalarish], start: int, steps: int) -> SuperSequencePair:
    """Iterate the 5x5 recurrence from (V_{s-3}, V_{s-2}, V_{s-1}, W_{s-2}, W_{s-1})

    The result covers [start - 2, start - 1 + steps].

    Raises:
        ParityMismatch: if init is not three even values then two odd values
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if len(init) != 5:
        raise DimensionMismatch("Order 5/2 recurrence needs five initial values")
    state = tuple(as_scalar(x) for x in init)
    for k, parity in enumerate((Parity.EVEN,) * 3 + (Parity.ODD,) * 2):
        require_parity(state[k], parity, f"init[{k}]")

    v = [state[1], state[2]]
    w = [state[3], state[4]]
    for i in range(start, start + steps):
        state = mat_vec(op.step_matrix(i), state)
        v.append(state[2])
        w.append(state[4])
    return SuperSequencePair(start - 2, tuple(v), tuple(w))


def sturm_liouville_residual_5_2(op: FifthHalfOperator, s: SuperSequencePair) -> SuperSequencePair:
    """Residuals of the order 5/2 recurrence on [lo + 3, hi]

    v: V_i - (V_{i-3} - a'_i V_{i-2} + a_i V_{i-1} + beta_i W_{i-1})
    w: W_i - (beta'_i V_{i-1} - W_{i-2} + (a'_i - 1) W_{i-1})
    """
    if len(s) < 4:
        raise InsufficientSupport("Order 5/2 operator needs at least four points")

    def v_value(i: int) -> SuperScalar:
        a, a_prime, beta, _ = op.coefficient(i)
        return s.v_at(i) - (s.v_at(i - 3) - a_prime * s.v_at(i - 2)
                            + a * s.v_at(i - 1) + beta * s.w_at(i - 1))

    def w_value(i: int) -> SuperScalar:
        _, a_prime, _, beta_prime = op.coefficient(i)
        return s.w_at(i) - (beta_prime * s.v_at(i - 1) - s.w_at(i - 2)
                            + (a_prime - 1) * s.w_at(i - 1))

    return SuperSequencePair.from_functions(s.lo + 3, s.hi, v_value, w_value)
