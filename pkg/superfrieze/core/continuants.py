"""Classical continuants and the three supercontinuant families"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .grassmann import (
    ONE, ZERO, Parity, Scalarish, SuperScalar, as_scalar, even, generator, odd,
    product, require_parity,
)
from .hill import HillCoefficients
from .supermatrix import SuperMatrix, berezinian, det_first_column
from ..utils.errors import DimensionMismatch
from ..utils.logger import logger


class Family(str, enum.Enum):
    """EVEN = K(a1 bb|...|an bb), ODD = K(a1 bb|...|a_{n-1} bb|bn), BRACKET = K(b1|a2 bb|...|bn)"""
    EVEN = 'even'
    ODD = 'odd'
    BRACKET = 'bracket'

    @classmethod
    def parse(cls, tag: Union[str, 'Family']) -> 'Family':
        try:
            return cls(tag.value if isinstance(tag, Family) else tag.lower())
        except ValueError:
            raise ValueError(f"Unknown continuant family {tag!r}; "
                             f"expected one of {[f.value for f in cls]}") from None


METHODS = ('recurrence', 'euler', 'determinant', 'berezinian')


@dataclass(frozen=True)
class ContinuantSpec:
    """Family, length and the symbols a_1..a_n, beta_1..beta_n"""

    family: Family
    n: int
    a: Tuple[SuperScalar, ...]
    beta: Tuple[SuperScalar, ...]

    def __post_init__(self):
        object.__setattr__(self, 'family', Family.parse(self.family))
        if self.n < 1:
            raise DimensionMismatch(f"Continuant length must be at least 1, got {self.n}")
        if len(self.a) != self.n or len(self.beta) != self.n:
            raise DimensionMismatch(f"Need {self.n} even and {self.n} odd symbols")
        object.__setattr__(self, 'a', tuple(
            require_parity(as_scalar(x), Parity.EVEN, f"a_{k + 1}") for k, x in enumerate(self.a)))
        object.__setattr__(self, 'beta', tuple(
            require_parity(as_scalar(x), Parity.ODD, f"beta_{k + 1}") for k, x in enumerate(self.beta)))

    @classmethod
    def symbolic(cls, family: Union[str, Family], n: int) -> 'ContinuantSpec':
        idx = range(1, n + 1)
        return cls(Family.parse(family), n,
                   tuple(generator(even('a', i)) for i in idx),
                   tuple(generator(odd('b', i)) for i in idx))

    def a_(self, p: int) -> SuperScalar:
        return self.a[p - 1]

    def beta_(self, p: int) -> SuperScalar:
        return self.beta[p - 1]


def continuant_classical(a: Sequence[Scalarish]) -> SuperScalar:
    """K(a_1, ..., a_n) = a_n K(a_1..a_{n-1}) - K(a_1..a_{n-2}), K() = 1

    Raises:
        ParityMismatch: if some a_i is not even
    """
    prev, cur = ZERO, ONE
    for k, x in enumerate(a):
        x = require_parity(as_scalar(x), Parity.EVEN, f"a_{k + 1}")
        prev, cur = cur, x * cur - prev
    return cur


def solution_pair(a: Sequence[SuperScalar], beta: Sequence[SuperScalar]) -> Tuple[List[SuperScalar], List[SuperScalar]]:
    """(v_0..v_n, w_0..w_n) from v_{-1} = 0, v_0 = 1, w_0 = 0 and

    v_i = a_i v_{i-1} - v_{i-2} - beta_i w_{i-1},  w_i = w_{i-1} + beta_i v_{i-1}.
    a may be one shorter than beta; the last step then only advances w.
    """
    v_prev, v, w = ZERO, ONE, ZERO
    vs, ws = [v], [w]
    for i, b in enumerate(beta):
        w_next = w + b * v
        if i < len(a):
            v_prev, v = v, a[i] * v - v_prev - b * w
            vs.append(v)
        w = w_next
        ws.append(w)
    return vs, ws


def _bracket(spec: ContinuantSpec) -> SuperScalar:
    """K(b1|a2 bb|...|bn) via the odd/even pair

    C_k = K(b1|a2 bb|...|ak bb) (odd), B_k = K(b1|...|bk) (even):
    C_k = C_{k-1} a_k + B_{k-1} b_k - C_{k-2},  B_k = -b_k C_{k-1} + B_{k-1}.
    """
    if spec.n == 1:
        return spec.beta_(1)
    c_prev, c = ZERO, spec.beta_(1)
    b = ONE
    for k in range(2, spec.n + 1):
        beta_k = spec.beta_(k)
        b_next = -beta_k * c + b
        if k < spec.n:
            c_prev, c = c, c * spec.a_(k) + b * beta_k - c_prev
        b = b_next
    return b


def supercontinuant_recurrence(spec: ContinuantSpec) -> SuperScalar:
    if spec.family == Family.EVEN:
        vs, _ = solution_pair(spec.a, spec.beta)
        return vs[-1]
    if spec.family == Family.ODD:
        _, ws = solution_pair(spec.a[:-1], spec.beta)
        return ws[-1]
    return _bracket(spec)


def slot_labels(spec: ContinuantSpec) -> List[int]:
    """Index of the beta in each slot of the starting product"""
    n = spec.n
    if spec.family == Family.EVEN:
        return [p for p in range(1, n + 1) for _ in range(2)]
    if spec.family == Family.ODD:
        return [p for p in range(1, n) for _ in range(2)] + [n]
    if n == 1:
        return [1]
    return [1] + [p for p in range(2, n) for _ in range(2)] + [n]


class Piece(str, enum.Enum):
    DOT = 'dot'
    DASH = 'dash'
    LONG_DASH = 'long_dash'

    @property
    def length(self) -> int:
        return {'dot': 1, 'dash': 2, 'long_dash': 4}[self.value]


@dataclass(frozen=True)
class Tiling:
    """Pieces (kind, first slot) covering the slots left to right; slots are 1-based"""

    pieces: Tuple[Tuple[Piece, int], ...]

    def __str__(self) -> str:
        return ' + '.join(f"{kind.value}({slot})" for kind, slot in self.pieces)


def _dash_value(spec: ContinuantSpec, p: int, q: int) -> Optional[SuperScalar]:
    if p == q:
        return spec.a_(p)
    if q == p + 1:
        return ONE
    return None


def _long_dash_allowed(labels: Sequence[int], s: int) -> bool:
    p = labels[s]
    return labels[s:s + 4] == [p, p, p + 1, p + 1]


def enumerate_tilings(spec: ContinuantSpec) -> Iterator[Tiling]:
    """All ways of striking out pairs and aligned 4-tuples b_i b_i b_{i+1} b_{i+1}"""
    labels = slot_labels(spec)
    total = len(labels)

    def walk(s: int, acc: Tuple[Tuple[Piece, int], ...]) -> Iterator[Tiling]:
        if s == total:
            yield Tiling(acc)
            return
        yield from walk(s + 1, acc + ((Piece.DOT, s + 1),))
        if s + 2 <= total and _dash_value(spec, labels[s], labels[s + 1]) is not None:
            yield from walk(s + 2, acc + ((Piece.DASH, s + 1),))
        if s + 4 <= total and _long_dash_allowed(labels, s):
            yield from walk(s + 4, acc + ((Piece.LONG_DASH, s + 1),))

    yield from walk(0, ())


def tiling_value(spec: ContinuantSpec, tiling: Tiling) -> SuperScalar:
    """Dash values times the surviving betas in slot order"""
    labels = slot_labels(spec)
    factors: List[SuperScalar] = []
    for kind, slot in tiling.pieces:
        s = slot - 1
        if kind == Piece.DOT:
            factors.append(spec.beta_(labels[s]))
        elif kind == Piece.DASH:
            factors.append(_dash_value(spec, labels[s], labels[s + 1]))
        else:
            factors.append(-ONE)
    return product(factors)


def supercontinuant_euler(spec: ContinuantSpec) -> SuperScalar:
    total = ZERO
    count = 0
    for tiling in enumerate_tilings(spec):
        total = total + tiling_value(spec, tiling)
        count += 1
    logger.debug(f"Euler rule for {spec.family.value} n={spec.n}: {count} tilings")
    return total


def continuant_matrix(spec: ContinuantSpec) -> SuperMatrix:
    """Square matrix whose first-column determinant is the supercontinuant"""
    n = spec.n
    a, beta = spec.a_, spec.beta_

    def even_part(r: int, c: int) -> SuperScalar:
        # tridiagonal plus beta_r beta_c above the superdiagonal
        if c == r:
            return a(r)
        if c == r - 1:
            return -ONE
        if c == r + 1:
            return -ONE + beta(r) * beta(c)
        if c > r + 1:
            return beta(r) * beta(c)
        return ZERO

    if spec.family == Family.EVEN:
        rows = [[even_part(r, c) for c in range(1, n + 1)] for r in range(1, n + 1)]
        return SuperMatrix(rows)

    if spec.family == Family.BRACKET and n == 1:
        return SuperMatrix([[beta(1)]])

    rows = []
    for r in range(1, n + 1):
        row = []
        for c in range(1, n):
            if spec.family == Family.BRACKET and r == 1:
                row.append(beta(c))
            elif r == n:
                row.append(-ONE if c == n - 1 else ZERO)
            else:
                row.append(even_part(r, c))
        if spec.family == Family.BRACKET and r == 1:
            row.append(ONE)
        else:
            row.append(beta(r))
        rows.append(row)
    return SuperMatrix(rows)


def supercontinuant_determinant(spec: ContinuantSpec) -> SuperScalar:
    return det_first_column(continuant_matrix(spec))


def berezinian_blocks(spec: ContinuantSpec) -> SuperMatrix:
    """2n x 2n matrix (A B; C D) with block (n, n)

    A is tridiagonal (a_i on the diagonal, -1 beside it), B[r][c] = beta_r for
    c >= r, C = diag(-beta_i), D = Id.
    """
    n = spec.n
    rows: List[List[SuperScalar]] = []
    for r in range(1, n + 1):
        left = [spec.a_(r) if c == r else (-ONE if abs(c - r) == 1 else ZERO) for c in range(1, n + 1)]
        right = [spec.beta_(r) if c >= r else ZERO for c in range(1, n + 1)]
        rows.append(left + right)
    for r in range(1, n + 1):
        left = [-spec.beta_(r) if c == r else ZERO for c in range(1, n + 1)]
        right = [ONE if c == r else ZERO for c in range(1, n + 1)]
        rows.append(left + right)
    return SuperMatrix(rows, (n, n))


def supercontinuant_berezinian(spec: Union[int, ContinuantSpec]) -> SuperScalar:
    """Berezinian form of K(a1 bb|...|an bb)"""
    if isinstance(spec, int):
        spec = ContinuantSpec.symbolic(Family.EVEN, spec)
    if spec.family != Family.EVEN:
        raise ValueError("Berezinian form exists only for the even family")
    return berezinian(berezinian_blocks(spec))


_DISPATCH = {
    'recurrence': supercontinuant_recurrence,
    'euler': supercontinuant_euler,
    'determinant': supercontinuant_determinant,
    'berezinian': supercontinuant_berezinian,
}


def methods_for(family: Family) -> Tuple[str, ...]:
    return METHODS if Family.parse(family) == Family.EVEN else METHODS[:3]


def supercontinuant(spec: ContinuantSpec, method: str = 'recurrence') -> SuperScalar:
    if method not in _DISPATCH:
        raise ValueError(f"Unknown method {method!r}; expected one of {list(METHODS)}")
    if method not in methods_for(spec.family):
        raise ValueError(f"Method {method!r} is not available for the {spec.family.value} family")
    return _DISPATCH[method](spec)


def cross_check(spec: ContinuantSpec) -> Dict[str, Any]:
    """Value by every applicable method and whether they all agree"""
    values = {method: supercontinuant(spec, method) for method in methods_for(spec.family)}
    first = values['recurrence']
    return {'values': values, 'agree': all(v == first for v in values.values())}


def term_count(family: Union[str, Family], n: int) -> int:
    """Number of monomials of the fully symbolic supercontinuant"""
    return len(supercontinuant_recurrence(ContinuantSpec.symbolic(family, n)))


def term_counts(family: Union[str, Family], max_n: int) -> List[int]:
    return [term_count(family, n) for n in range(1, max_n + 1)]


def classical_tiling_count(n: int) -> int:
    """Tilings of n slots by dots and dashes (Euler's rule for K(a_1..a_n))"""
    prev, cur = 1, 1
    for _ in range(n - 1):
        prev, cur = cur, cur + prev
    return cur


def frieze_entry_as_continuant(a: Sequence[Scalarish], beta: Sequence[Scalarish],
                               i: int, j: int, start: int = 0) -> Tuple[SuperScalar, SuperScalar]:
    """(f_{j,i}, phi_{j,i}) as (K(a_j bb|...|a_i bb), K(a_j bb|...|a_{i-1} bb|b_i))

    a and beta give one period starting at ``start``; they are extended with
    a_{k+n} = a_k and beta_{k+n} = -beta_k.
    """
    if i < j - 2:
        raise ValueError(f"Entry ({j}, {i}) lies above the frieze")
    if i == j - 2:
        return ZERO, ZERO
    coeffs = HillCoefficients(tuple(a), tuple(beta), start)
    window = range(j, i + 1)
    a_w = [coeffs.a_at(k) for k in window]
    beta_w = [coeffs.beta_at(k) for k in window]
    vs, _ = solution_pair(a_w, beta_w)
    _, ws = solution_pair(a_w[:-1], beta_w)
    return vs[-1], ws[-1]
