"""Superfriezes: construction, diamond rule, closure, glide and the Hill bijection

Indices are stored doubled.  The even entry f_{i,j} lives at (2i, 2j) of
``Superfrieze.even``; odd entries phi_{i,j} and phi_{i+1/2,j+1/2} live in
``Superfrieze.odd`` at (2i, 2j) and (2i+1, 2j+1).  The row of an entry is
j - i: even rows -2 (zeros), -1 (ones), 0..m-1 (interior), m (ones) and
m+1 (zeros); odd rows -1 (zeros) through m+1 (zeros once closed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .grassmann import (
    ONE, ZERO, GeneratorId, Parity, Scalarish, SuperScalar, as_scalar, body,
    even, generator, invert, odd, require_parity, substitute,
)
from .hill import (
    HILL_MATRIX, HillCoefficients, HillSystem, SuperSequencePair,
    check_hill_condition, monodromy, propagate, transfer_matrix,
)
from .supermatrix import SuperMatrix, is_osp12, mat_mul, osp_inverse
from ..utils.config import config
from ..utils.errors import (
    DimensionMismatch, NotClosed, NotGeneric, NotHill, NotInGroup, RuleViolation,
    UnsupportedWidth,
)
from ..utils.logger import logger

Number = Union[int, Fraction, float]
Key = Tuple[int, int]


def _double(x: Number) -> int:
    doubled = Fraction(x) * 2
    if doubled.denominator != 1:
        raise ValueError(f"Frieze index {x} is not a multiple of 1/2")
    return int(doubled)


@dataclass(frozen=True, order=True)
class FriezeIndex:
    """Doubled frieze position: the entry sits at (i2/2, j2/2)"""

    i2: int
    j2: int

    def __post_init__(self):
        if (self.i2 - self.j2) % 2:
            raise ValueError(f"Mixed integer/half-integer index ({self.i2}, {self.j2})")

    @classmethod
    def of(cls, i: Number, j: Number) -> 'FriezeIndex':
        return cls(_double(i), _double(j))

    @property
    def i(self) -> Fraction:
        return Fraction(self.i2, 2)

    @property
    def j(self) -> Fraction:
        return Fraction(self.j2, 2)

    @property
    def is_integer(self) -> bool:
        return self.i2 % 2 == 0

    @property
    def row(self) -> int:
        return (self.j2 - self.i2) // 2

    def __str__(self) -> str:
        return f"({_fmt(self.i)}, {_fmt(self.j)})"

    def to_dict(self) -> Dict[str, int]:
        return {'i2': self.i2, 'j2': self.j2}


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Diamond:
    """Elementary diamond: B on top, A left, D right, C bottom

    Xi and Psi are the odd entries above A and D, Phi and Sigma those below.
    """

    A: SuperScalar
    B: SuperScalar
    C: SuperScalar
    D: SuperScalar
    Xi: SuperScalar
    Psi: SuperScalar
    Phi: SuperScalar
    Sigma: SuperScalar

    def check_parities(self) -> None:
        for name in ('A', 'B', 'C', 'D'):
            require_parity(getattr(self, name), Parity.EVEN, name)
        for name in ('Xi', 'Psi', 'Phi', 'Sigma'):
            require_parity(getattr(self, name), Parity.ODD, name)

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name).to_dict()
                for name in ('A', 'B', 'C', 'D', 'Xi', 'Psi', 'Phi', 'Sigma')}


def rule_residuals(d: Diamond) -> Tuple[SuperScalar, SuperScalar, SuperScalar]:
    """AD - BC - 1 - Sigma Xi, A Sigma - C Xi - Phi, B Sigma - D Xi - Psi"""
    return (d.A * d.D - d.B * d.C - ONE - d.Sigma * d.Xi,
            d.A * d.Sigma - d.C * d.Xi - d.Phi,
            d.B * d.Sigma - d.D * d.Xi - d.Psi)


def check_diamond(d: Diamond) -> bool:
    """True iff AD - BC = 1 + Sigma Xi, A Sigma - C Xi = Phi, B Sigma - D Xi = Psi

    Raises:
        ParityMismatch: if an entry has the wrong parity
    """
    d.check_parities()
    return not any(rule_residuals(d))


def diamond_to_osp(d: Diamond) -> SuperMatrix:
    """OSp(1|2) element (a, b, gamma; c, d, delta; alpha, beta, e) of a diamond

    a = -B, b = A, c = -D, d = C, gamma = Xi, alpha = Psi, beta = -Phi,
    delta = Sigma and e = 1 + alpha beta.

    Raises:
        RuleViolation: if the diamond breaks the frieze rule
    """
    if not check_diamond(d):
        raise RuleViolation(f"Diamond violates the frieze rule: {d}")
    alpha, beta = d.Psi, -d.Phi
    M = SuperMatrix([[-d.B, d.A, d.Xi], [-d.D, d.C, d.Sigma], [alpha, beta, ONE + alpha * beta]], (2, 1))
    if not is_osp12(M):
        raise RuleViolation(f"Diamond does not map into OSp(1|2): {d}")
    return M


def osp_to_diamond(M: SuperMatrix) -> Diamond:
    """Inverse of diamond_to_osp

    Raises:
        NotInGroup: if M is not an OSp(1|2) element
    """
    if not is_osp12(M):
        raise NotInGroup(f"Not an OSp(1|2) element: {M!r}")
    return Diamond(A=M[0, 1], B=-M[0, 0], C=M[1, 1], D=-M[1, 0],
                   Xi=M[0, 2], Psi=M[2, 0], Phi=-M[2, 1], Sigma=M[1, 2])


class Superfrieze:
    """Entries of a superfrieze over a window of SE diagonals

    Construction goes through frieze_from_first_rows / frieze_from_hill;
    the object is not mutated afterwards.
    """

    def __init__(self, m: int, coeffs: HillCoefficients,
                 even_entries: Mapping[Key, SuperScalar],
                 odd_entries: Mapping[Key, SuperScalar],
                 diagonals: Tuple[int, int]):
        if m < 1:
            raise UnsupportedWidth(f"Frieze width must be at least 1, got {m}")
        if coeffs.n != m + 3:
            raise DimensionMismatch(f"Width {m} needs {m + 3} coefficients, got {coeffs.n}")
        self.m = m
        self.coeffs = coeffs
        self.even: Dict[Key, SuperScalar] = dict(even_entries)
        self.odd: Dict[Key, SuperScalar] = dict(odd_entries)
        self.diagonals = diagonals

    @property
    def n(self) -> int:
        return self.m + 3

    @property
    def start(self) -> int:
        return self.coeffs.start

    def f(self, i: Number, j: Number) -> Optional[SuperScalar]:
        """Even entry f_{i,j}, or None outside the stored window"""
        return self.even.get((_double(i), _double(j)))

    def phi(self, i: Number, j: Number) -> Optional[SuperScalar]:
        """Odd entry phi_{i,j} (i, j both integers or both half-integers)"""
        return self.odd.get((_double(i), _double(j)))

    def entries(self) -> Iterator[Tuple[FriezeIndex, Parity, SuperScalar]]:
        for (i2, j2), value in sorted(self.even.items()):
            yield FriezeIndex(i2, j2), Parity.EVEN, value
        for (i2, j2), value in sorted(self.odd.items()):
            yield FriezeIndex(i2, j2), Parity.ODD, value

    def first_rows(self) -> HillCoefficients:
        """(a_i, beta_i) = (f_{i,i}, phi_{i,i}) over one period from start"""
        idx = range(self.start, self.start + self.n)
        return HillCoefficients(tuple(self.f(i, i) for i in idx),
                                tuple(self.phi(i, i) for i in idx), self.start)

    def hill_system(self) -> HillSystem:
        return HillSystem(self.first_rows())

    def se_diagonal(self, j: int) -> SuperSequencePair:
        """(V_i, W_i) = (f_{j,i}, phi_{j,i}) on [j - 2, j + m + 1]"""
        lo, hi = j - 2, j + self.m + 1
        v = [self.f(j, i) for i in range(lo, hi + 1)]
        w = [ZERO] + [self.phi(j, i) for i in range(lo + 1, hi + 1)]
        if any(x is None for x in v + w):
            raise KeyError(f"Diagonal {j} is not stored")
        return SuperSequencePair(lo, tuple(v), tuple(w))

    def substitute(self, assignment: Mapping[GeneratorId, Scalarish]) -> 'Superfrieze':
        return Superfrieze(
            self.m, self.coeffs.substitute(assignment),
            {k: substitute(v, assignment) for k, v in self.even.items()},
            {k: substitute(v, assignment) for k, v in self.odd.items()},
            self.diagonals)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Superfrieze):
            return NotImplemented
        return self.m == other.m and self.even == other.even and self.odd == other.odd

    def to_dict(self) -> Dict[str, Any]:
        return {
            'm': self.m,
            'n': self.n,
            'start': self.start,
            'diagonals': list(self.diagonals),
            'entries': [
                {'i2': index.i2, 'j2': index.j2, 'parity': str(parity), 'value': value.to_dict()}
                for index, parity, value in self.entries()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'Superfrieze':
        m = int(data['m'])
        if 'n' in data and int(data['n']) != m + 3:
            raise DimensionMismatch(f"n={data['n']} does not match width {m}")
        even_entries: Dict[Key, SuperScalar] = {}
        odd_entries: Dict[Key, SuperScalar] = {}
        for entry in data['entries']:
            index = FriezeIndex(int(entry['i2']), int(entry['j2']))
            value = SuperScalar.from_dict(entry['value'])
            parity = entry.get('parity', 'even' if index.is_integer else 'odd')
            if parity == 'even':
                if not index.is_integer:
                    raise ValueError(f"Even entry at half-integer index {index}")
                even_entries[(index.i2, index.j2)] = value
            else:
                odd_entries[(index.i2, index.j2)] = value
        start = int(data.get('start', 0))
        idx = range(start, start + m + 3)
        try:
            a = tuple(even_entries[(2 * i, 2 * i)] for i in idx)
            beta = tuple(odd_entries[(2 * i, 2 * i)] for i in idx)
        except KeyError as e:
            raise DimensionMismatch(f"Dump lacks the first rows over one period: {e}") from e
        coeffs = HillCoefficients(a, beta, start)
        diagonals = tuple(data.get('diagonals', (min(k[0] for k in even_entries) // 2,
                                                 max(k[0] for k in even_entries) // 2)))
        return cls(m, coeffs, even_entries, odd_entries, diagonals)


def _diagonal_entries(coeffs: HillCoefficients, j: int, m: int) -> Tuple[Dict[int, SuperScalar], Dict[int, SuperScalar]]:
    """SE diagonal j from (f_{j,j-3}, f_{j,j-2}, phi_{j,j-2}) = (-1, 0, 0)"""
    seq = propagate(coeffs, (-1, 0, 0), j - 1, m + 3)
    f_vals = {i: seq.v_at(i) for i in range(j - 2, j + m + 2)}
    phi_vals = {i: seq.w_at(i) for i in range(j - 1, j + m + 2)}
    return f_vals, phi_vals


def _build(coeffs: HillCoefficients, m: int, periods: Optional[int] = None) -> Superfrieze:
    if m < 1:
        raise UnsupportedWidth(f"Frieze width must be at least 1, got {m}")
    n = m + 3
    if coeffs.n != n:
        raise DimensionMismatch(f"Width {m} needs {n} coefficients, got {coeffs.n}")
    periods = config.get('frieze.periods', 2) if periods is None else periods
    lo = coeffs.start - n * (periods // 2)
    hi = lo + periods * n - 1

    even_entries: Dict[Key, SuperScalar] = {}
    odd_entries: Dict[Key, SuperScalar] = {}
    prev_f, prev_phi = _diagonal_entries(coeffs, lo - 1, m)
    for j in range(lo, hi + 1):
        f_vals, phi_vals = _diagonal_entries(coeffs, j, m)
        for i, value in f_vals.items():
            if 0 <= i - j < m and not body(value):
                raise NotGeneric(f"Entry f_{{{j},{i}}} has zero body", index=FriezeIndex(2 * j, 2 * i))
            even_entries[(2 * j, 2 * i)] = value
        for i, value in phi_vals.items():
            odd_entries[(2 * j, 2 * i)] = value
        # phi_{j-1/2, i+1/2} = f_{j,i} phi_{j-1,i} - f_{j-1,i} phi_{j,i}
        odd_entries[(2 * j - 1, 2 * j - 3)] = ZERO
        for i in range(j - 1, j + m + 1):
            odd_entries[(2 * j - 1, 2 * i + 1)] = (
                f_vals[i] * prev_phi[i] - prev_f[i] * phi_vals[i])
        prev_f, prev_phi = f_vals, phi_vals

    logger.debug(f"Built width-{m} frieze on diagonals [{lo}, {hi}]: "
                 f"{len(even_entries)} even, {len(odd_entries)} odd entries")
    return Superfrieze(m, coeffs, even_entries, odd_entries, (lo, hi))


def frieze_from_first_rows(a: Sequence[Scalarish], beta: Sequence[Scalarish], m: int,
                           start: Optional[int] = None, periods: Optional[int] = None) -> Superfrieze:
    """Superfrieze whose first even and odd rows are a and beta

    a[k] = f_{s+k,s+k} and beta[k] = phi_{s+k,s+k} with s = start.
    Closure is not required.

    Raises:
        DimensionMismatch: if the lists do not have length m + 3
        NotGeneric: if an interior even entry has zero body
        UnsupportedWidth: if m < 1
    """
    if m < 1:
        raise UnsupportedWidth(f"Frieze width must be at least 1, got {m}")
    if len(a) != m + 3 or len(beta) != m + 3:
        raise DimensionMismatch(f"Width {m} needs {m + 3} first-row entries, "
                                f"got {len(a)} and {len(beta)}")
    start = config.get('frieze.start', 0) if start is None else start
    return _build(HillCoefficients(tuple(a), tuple(beta), start), m, periods)


def symbolic_frieze(m: int, start: Optional[int] = None) -> Superfrieze:
    """Frieze over free first rows a_i (even), b_i (odd)"""
    start = config.get('frieze.start', 0) if start is None else start
    coeffs = HillCoefficients.symbolic(m + 3, start)
    return _build(coeffs, m)


def _window(F: Superfrieze) -> range:
    lo, hi = F.diagonals
    return range(lo, hi + 1)


def diamond_at(F: Superfrieze, i: int, j: int) -> Optional[Diamond]:
    """Diamond with top B = f_{i,j}; None if some entry is not stored"""
    h = Fraction(1, 2)
    parts = (F.f(i - 1, j), F.f(i, j), F.f(i - 1, j + 1), F.f(i, j + 1),
             F.phi(i - h, j + h), F.phi(i, j + 1), F.phi(i - 1, j + 1), F.phi(i - h, j + 3 * h))
    if any(x is None for x in parts):
        return None
    return Diamond(*parts)


def neighbors_at(F: Superfrieze, i: int, j: int) -> Optional[Tuple[SuperScalar, ...]]:
    """(Psi~, Xi~, Phi~, Sigma~) next to the diamond with top f_{i,j}"""
    h = Fraction(1, 2)
    parts = (F.phi(i, j), F.phi(i + h, j + h), F.phi(i - 1, j), F.phi(i + h, j + 3 * h))
    if any(x is None for x in parts):
        return None
    return parts


def _diamond_tops(F: Superfrieze) -> Iterator[Tuple[int, int]]:
    for i in _window(F):
        for d in range(-2, F.m):
            yield i, i + d


def find_diamond_violation(F: Superfrieze) -> Optional[FriezeIndex]:
    """Top of the first stored diamond breaking the rule"""
    for i, j in _diamond_tops(F):
        d = diamond_at(F, i, j)
        if d is not None and not check_diamond(d):
            return FriezeIndex.of(i, j)
    return None


def find_neighbor_violation(F: Superfrieze) -> Optional[FriezeIndex]:
    """First top where B(Phi - Phi~) = A(Psi - Psi~) or B(Sigma - Sigma~) = D(Xi - Xi~) fails"""
    for i, j in _diamond_tops(F):
        d = diamond_at(F, i, j)
        nb = neighbors_at(F, i, j)
        if d is None or nb is None:
            continue
        psi_t, xi_t, phi_t, sigma_t = nb
        if (d.B * (d.Phi - phi_t) != d.A * (d.Psi - psi_t)
                or d.B * (d.Sigma - sigma_t) != d.D * (d.Xi - xi_t)):
            return FriezeIndex.of(i, j)
    return None


def all_diamonds_valid(F: Superfrieze) -> bool:
    return find_diamond_violation(F) is None


def closure_residuals(F: Superfrieze) -> Dict[str, List[SuperScalar]]:
    """f_{j,j+m} - 1, f_{j,j+m+1} and phi_{j,j+m+1} for one period of j

    The 2n even and n odd closure equations, reported rather than solved.
    """
    m = F.m
    idx = range(F.start, F.start + F.n)
    return {
        'ones': [F.f(j, j + m) - ONE for j in idx],
        'zeros': [F.f(j, j + m + 1) for j in idx],
        'odd_zeros': [F.phi(j, j + m + 1) for j in idx],
    }


def find_closure_violation(F: Superfrieze) -> Optional[FriezeIndex]:
    m = F.m
    h = Fraction(1, 2)
    for j in _window(F):
        if F.f(j, j + m) != ONE:
            return FriezeIndex.of(j, j + m)
        if F.f(j, j + m + 1):
            return FriezeIndex.of(j, j + m + 1)
        if F.phi(j, j + m + 1):
            return FriezeIndex.of(j, j + m + 1)
        implied = F.phi(j + h, j + m + 3 * h)
        if implied:
            return FriezeIndex.of(j + h, j + m + 3 * h)
    return None


def check_closure(F: Superfrieze) -> bool:
    """Rows of 1's and 0's at m and m+1, odd zeros at m+1 (both kinds)"""
    return find_closure_violation(F) is None


def frieze_variety_equations(n: int, start: Optional[int] = None) -> List[SuperScalar]:
    """Nonzero closure residuals of the free frieze with period n"""
    F = symbolic_frieze(n - 3, start)
    residuals = closure_residuals(F)
    return [r for key in ('ones', 'zeros', 'odd_zeros') for r in residuals[key] if r]


def _require_closed(F: Superfrieze, what: str) -> None:
    where = find_closure_violation(F)
    if where is not None:
        raise NotClosed(f"{what} needs a closed frieze; closure fails at {where}")


def find_glide_violation(F: Superfrieze) -> Optional[FriezeIndex]:
    """f_{i,j} = f_{j-m-1,i-2}, phi_{i,j} = phi_{j-m-3/2,i-3/2}, phi_{i+1/2,j+1/2} = -phi_{j-m-1,i-1}

    Raises:
        NotClosed: if F is not closed
    """
    _require_closed(F, 'Glide check')
    m2 = 2 * F.m
    for (i2, j2), value in sorted(F.even.items()):
        image = F.even.get((j2 - m2 - 2, i2 - 4))
        if image is not None and image != value:
            return FriezeIndex(i2, j2)
    for (i2, j2), value in sorted(F.odd.items()):
        if i2 % 2 == 0:
            image = F.odd.get((j2 - m2 - 3, i2 - 3))
            expected = image
        else:
            image = F.odd.get((j2 - 1 - m2 - 2, i2 - 1 - 2))
            expected = None if image is None else -image
        if expected is not None and expected != value:
            return FriezeIndex(i2, j2)
    return None


def check_glide(F: Superfrieze) -> bool:
    return find_glide_violation(F) is None


def find_periodicity_violation(F: Superfrieze) -> Optional[FriezeIndex]:
    """f_{i+n,j+n} = f_{i,j} and phi_{i+n,j+n} = -phi_{i,j} on stored pairs

    Raises:
        NotClosed: if F is not closed
    """
    _require_closed(F, 'Periodicity check')
    n2 = 2 * F.n
    for (i2, j2), value in sorted(F.even.items()):
        shifted = F.even.get((i2 + n2, j2 + n2))
        if shifted is not None and shifted != value:
            return FriezeIndex(i2 + n2, j2 + n2)
    for (i2, j2), value in sorted(F.odd.items()):
        shifted = F.odd.get((i2 + n2, j2 + n2))
        if shifted is not None and shifted != -value:
            return FriezeIndex(i2 + n2, j2 + n2)
    return None


def check_periodicity(F: Superfrieze) -> bool:
    return find_periodicity_violation(F) is None


def _require_generic(F: Superfrieze) -> None:
    for j in _window(F):
        for d in range(F.m):
            value = F.f(j, j + d)
            if value is not None and not body(value):
                raise NotGeneric(f"Entry f_{{{j},{j + d}}} has zero body", index=FriezeIndex.of(j, j + d))


def find_pairing_violation(F: Superfrieze) -> Optional[FriezeIndex]:
    """phi_{i,i} = phi_{i+1/2,i+1/2} on the first odd row,
    phi_{i,i+m} = -phi_{i-1/2,i+m-1/2} on the last one

    Raises:
        NotGeneric: if an interior even entry has zero body
    """
    _require_generic(F)
    h = Fraction(1, 2)
    m = F.m
    for i in _window(F):
        first, twin = F.phi(i, i), F.phi(i + h, i + h)
        if first is not None and twin is not None and first != twin:
            return FriezeIndex.of(i, i)
        last, twin = F.phi(i, i + m), F.phi(i - h, i + m - h)
        if last is not None and twin is not None and last != -twin:
            return FriezeIndex.of(i, i + m)
    return None


def first_row_pairing(F: Superfrieze) -> bool:
    return find_pairing_violation(F) is None


def find_hill_violation(F: Superfrieze, j: int, direction: str = 'se') -> Optional[FriezeIndex]:
    """First index where a diagonal leaves its Hill equation

    SE diagonal j: (V_i, W_i) = (f_{j,i}, phi_{j,i}) with
      V_i = a_i V_{i-1} - V_{i-2} - beta_i W_{i-1},  W_i = W_{i-1} + beta_i V_{i-1}.
    NE diagonal j: (V*_i, W*_i) = (f_{i+2,j}, phi_{i+3/2,j+1/2}) with the sign of beta flipped:
      V*_i = a_i V*_{i-1} - V*_{i-2} + beta_i W*_{i-1},  W*_i = W*_{i-1} - beta_i V*_{i-1}.
    Here a_i = f_{i,i} and beta_i = phi_{i,i} = phi_{i+1/2,i+1/2}.
    """
    _require_generic(F)
    h = Fraction(1, 2)
    if direction == 'se':
        def V(i): return F.f(j, i)
        def W(i): return F.phi(j, i)
        sign = 1
        rng = range(j - 2 * F.n, j + 2 * F.n)
    elif direction == 'ne':
        def V(i): return F.f(i + 2, j)
        def W(i): return F.phi(i + 3 * h, j + h)
        sign = -1
        rng = range(j - 2 * F.n, j + 2 * F.n)
    else:
        raise ValueError(f"direction must be 'se' or 'ne', got {direction!r}")

    for i in rng:
        a, beta = F.f(i, i), F.phi(i, i)
        values = (V(i), V(i - 1), V(i - 2), W(i), W(i - 1))
        if a is None or beta is None or any(x is None for x in values):
            continue
        v_i, v_1, v_2, w_i, w_1 = values
        if sign < 0:
            beta = -beta
        if v_i != a * v_1 - v_2 - beta * w_1 or w_i != w_1 + beta * v_1:
            index = FriezeIndex.of(j, i) if direction == 'se' else FriezeIndex.of(i + 2, j)
            return index
    return None


def diagonal_satisfies_hill(F: Superfrieze, j: int, direction: str = 'se') -> bool:
    return find_hill_violation(F, j, direction) is None


def frieze_from_hill(sys: HillSystem) -> Superfrieze:
    """The frieze whose SE diagonals are the solutions started at (0, 0, 1)

    Raises:
        NotHill: if the monodromy is not diag(-1, -1, 1)
        UnsupportedWidth: for period 3
    """
    if not check_hill_condition(monodromy(sys)):
        raise NotHill("Monodromy differs from diag(-1, -1, 1)")
    F = _build(sys.coeffs, sys.n - 3)
    if not check_closure(F):
        raise NotClosed("Hill system produced an open frieze")
    return F


def recover_coefficients(s: SuperSequencePair) -> Tuple[List[SuperScalar], List[SuperScalar]]:
    """(a_i, beta_i) for i in [lo + 2, hi] from a solution (V, W)

    beta_i = (W_i - W_{i-1}) / V_{i-1},  a_i = (V_i + V_{i-2} + beta_i W_{i-1}) / V_{i-1}

    Raises:
        NotInvertible: if some V_{i-1} has no unit monomial body
    """
    a: List[SuperScalar] = []
    beta: List[SuperScalar] = []
    for i in range(s.lo + 2, s.hi + 1):
        inv = invert(s.v_at(i - 1))
        b = (s.w_at(i) - s.w_at(i - 1)) * inv
        a.append((s.v_at(i) + s.v_at(i - 2) + b * s.w_at(i - 1)) * inv)
        beta.append(b)
    return a, beta


def coefficients_from_diagonal(v: Sequence[Scalarish], w: Sequence[Scalarish],
                               start: int = 1) -> HillCoefficients:
    """Coefficients of one period from a solution on [start - 2, start + n - 1]

    Raises:
        NotInvertible: if some V_{i-1} has no unit monomial body
    """
    a, beta = recover_coefficients(SuperSequencePair(start - 2, tuple(v), tuple(w)))
    return HillCoefficients(tuple(a), tuple(beta), start)


def closed_coefficients_from_diagonal(v: Sequence[Scalarish], w: Sequence[Scalarish],
                                      start: Optional[int] = None) -> HillCoefficients:
    """Coefficients of the closed frieze with the given SE diagonal

    v = (f_{j,j}, ..., f_{j,j+m-1}) and w = (phi_{j,j}, ..., phi_{j,j+m}) with
    j = start.  The first n - 1 coefficients follow from the diagonal and its
    boundary values; the last one is A = J P^-1, where P is the product of the
    others and J = diag(-1, -1, 1).
    """
    start = config.get('frieze.start', 0) if start is None else start
    m = len(v)
    if len(w) != m + 1:
        raise DimensionMismatch(f"Width {m} needs {m + 1} odd diagonal entries, got {len(w)}")
    vs = [ZERO, ONE] + [require_parity(as_scalar(x), Parity.EVEN, 'diagonal V') for x in v] + [ONE, ZERO]
    ws = [ZERO, ZERO] + [require_parity(as_scalar(x), Parity.ODD, 'diagonal W') for x in w] + [ZERO]
    a, beta = recover_coefficients(SuperSequencePair(start - 2, tuple(vs), tuple(ws)))

    P = transfer_matrix(a[0], beta[0])
    for k in range(1, len(a)):
        P = mat_mul(transfer_matrix(a[k], beta[k]), P)
    last = mat_mul(HILL_MATRIX, osp_inverse(P))
    a.append(last[1, 1])
    beta.append(last[2, 1])
    return HillCoefficients(tuple(a), tuple(beta), start)


def laurent_expand(v: Sequence[Scalarish], w: Sequence[Scalarish],
                   start: Optional[int] = None) -> Superfrieze:
    """Closed frieze containing the SE diagonal (v, w); every entry is a
    Laurent polynomial in the even diagonal entries

    Raises:
        NotInvertible: if a diagonal entry has no unit monomial body
    """
    coeffs = closed_coefficients_from_diagonal(v, w, start)
    return _build(coeffs, len(v))


def free_diagonal(m: int, v_name: str = 'x', w_name: str = 'theta') -> Tuple[List[SuperScalar], List[SuperScalar]]:
    """Fresh generators x_1..x_m (even) and theta_1..theta_{m+1} (odd)"""
    return ([generator(even(v_name, k)) for k in range(1, m + 1)],
            [generator(odd(w_name, k)) for k in range(1, m + 2)])


def random_closed_frieze(m: int, rng: Optional[random.Random] = None,
                         odd_generators: int = 2, start: Optional[int] = None) -> Superfrieze:
    """Closed frieze from a random diagonal

    Even diagonal entries are positive rationals plus a random multiple of
    theta_1 theta_2; odd ones are random rational combinations of
    theta_1..theta_k.  Positive bodies keep every interior entry generic.
    """
    rng = rng if rng is not None else random.Random(config.get('random.seed', 2024))
    thetas = [generator(odd('theta', k)) for k in range(1, odd_generators + 1)]
    pair = thetas[0] * thetas[1] if len(thetas) > 1 else ZERO

    def rational(lo: int, hi: int) -> Fraction:
        return Fraction(rng.randint(lo, hi), rng.randint(1, 4))

    v = [rational(1, 9) + rational(-3, 3) * pair for _ in range(m)]
    w = [sum((rational(-3, 3) * t for t in thetas), ZERO) for _ in range(m + 1)]
    return laurent_expand(v, w, start)


def classical_projection(F: Superfrieze) -> Superfrieze:
    """Frieze of bodies: every odd generator sent to 0"""
    coeffs = HillCoefficients(tuple(body(x) for x in F.coeffs.a),
                              tuple(ZERO for _ in F.coeffs.beta), F.start)
    return Superfrieze(F.m, coeffs,
                       {k: body(v) for k, v in F.even.items()},
                       {k: ZERO for k in F.odd},
                       F.diagonals)


def check_report(F: Superfrieze) -> Dict[str, Any]:
    """Pass/fail of every frieze check with the first counterexample index"""
    def entry(where: Optional[FriezeIndex], error: Optional[str] = None) -> Dict[str, Any]:
        if error is not None:
            return {'pass': False, 'counterexample': None, 'error': error}
        return {'pass': where is None, 'counterexample': None if where is None else where.to_dict()}

    report: Dict[str, Any] = {
        'diamonds': entry(find_diamond_violation(F)),
        'neighbors': entry(find_neighbor_violation(F)),
        'closure': entry(find_closure_violation(F)),
    }
    for name, finder in (('glide', find_glide_violation), ('periodicity', find_periodicity_violation),
                         ('pairing', find_pairing_violation)):
        try:
            report[name] = entry(finder(F))
        except (NotClosed, NotGeneric) as e:
            report[name] = entry(None, str(e))
    report['all_pass'] = all(v['pass'] for v in report.values())
    return report


def render(F: Superfrieze, diagonals: Optional[Tuple[int, int]] = None) -> str:
    """Staggered plaintext array, one line per even or odd row"""
    lo, hi = diagonals if diagonals is not None else (F.start, F.start + F.n - 1)
    cells: List[Tuple[int, int, str]] = []
    for index, parity, value in F.entries():
        diag = index.i2 // 2 if index.is_integer else (index.i2 + 1) // 2
        if not lo <= diag <= hi:
            continue
        if parity == Parity.EVEN:
            line, col = 2 * index.row + 5, index.i2 + index.j2 + 3
        else:
            line, col = 2 * index.row + 4, index.i2 + index.j2 + 2
        cells.append((line, col, str(value)))
    if not cells:
        return ''
    width = max(len(text) for _, _, text in cells) + 1
    half = (width + 1) // 2
    min_col = min(col for _, col, _ in cells)
    lines: Dict[int, List[str]] = {}
    for line, col, text in sorted(cells):
        row = lines.setdefault(line, [])
        pos = (col - min_col) * half
        current = ''.join(row)
        if len(current) < pos:
            row.append(' ' * (pos - len(current)))
        row.append(text.center(width))
    return '\n'.join(''.join(lines[k]).rstrip() for k in sorted(lines))
