"""Supermatrices: products, OSp(1|2) membership, Berezinian, determinants"""

from __future__ import annotations

from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .grassmann import (
    ONE, ZERO, Parity, Scalarish, SuperScalar, add, as_scalar, has_parity,
    invert, mul,
)
from ..utils.errors import DimensionMismatch, NotInGroup

Grid = List[List[SuperScalar]]


class SuperMatrix:
    """Dense immutable matrix of SuperScalars with an even|odd block split

    The first p rows/columns are even-indexed and the last q odd-indexed.
    Parity of the entries is checked on demand (see parity_pattern_ok).
    """

    __slots__ = ('_rows', 'block')

    def __init__(self, entries: Sequence[Sequence[Scalarish]],
                 block: Optional[Tuple[int, int]] = None):
        rows = [tuple(as_scalar(x) for x in row) for row in entries]
        if not rows or not rows[0]:
            raise DimensionMismatch("Matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatch("Ragged matrix rows")
        if block is None:
            block = (len(rows), 0)
        if len(rows) == width and sum(block) != width:
            raise DimensionMismatch(f"Block {block} does not split a {width}x{width} matrix")
        self._rows = tuple(rows)
        self.block = (int(block[0]), int(block[1]))

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> SuperScalar:
        r, c = index
        return self._rows[r][c]

    def row(self, r: int) -> Tuple[SuperScalar, ...]:
        return self._rows[r]

    def grid(self) -> Grid:
        return [list(row) for row in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __neg__(self) -> 'SuperMatrix':
        return SuperMatrix([[-x for x in row] for row in self._rows], self.block)

    def __sub__(self, other: 'SuperMatrix') -> 'SuperMatrix':
        if self.shape != other.shape:
            raise DimensionMismatch(f"Cannot subtract {other.shape} from {self.shape}")
        return SuperMatrix(
            [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
            self.block)

    def __matmul__(self, other: 'SuperMatrix') -> 'SuperMatrix':
        return mat_mul(self, other)

    def __repr__(self) -> str:
        body = '; '.join(', '.join(str(x) for x in row) for row in self._rows)
        return f"SuperMatrix([{body}], block={self.block})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'rows': self.rows,
            'cols': self.cols,
            'block': list(self.block),
            'entries': [[x.to_dict() for x in row] for row in self._rows],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'SuperMatrix':
        entries = [[SuperScalar.from_dict(x) for x in row] for row in data['entries']]
        matrix = cls(entries, tuple(data.get('block', (len(entries), 0))))
        if matrix.shape != (data.get('rows', matrix.rows), data.get('cols', matrix.cols)):
            raise DimensionMismatch("Declared shape does not match entries")
        return matrix


def identity(n: int, block: Optional[Tuple[int, int]] = None) -> SuperMatrix:
    return SuperMatrix([[ONE if r == c else ZERO for c in range(n)] for r in range(n)], block)


def diagonal(values: Sequence[Scalarish], block: Optional[Tuple[int, int]] = None) -> SuperMatrix:
    n = len(values)
    return SuperMatrix([[as_scalar(values[r]) if r == c else ZERO for c in range(n)]
                        for r in range(n)], block)


def _grid_mul(left: Sequence[Sequence[SuperScalar]],
              right: Sequence[Sequence[SuperScalar]]) -> Grid:
    inner = len(right)
    width = len(right[0])
    out: Grid = []
    for row in left:
        out_row = []
        for c in range(width):
            acc = ZERO
            for k in range(inner):
                if row[k] and right[k][c]:
                    acc = add(acc, mul(row[k], right[k][c]))
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_mul(M: SuperMatrix, N: SuperMatrix) -> SuperMatrix:
    """Row-by-column product; entry order is preserved

    Raises:
        DimensionMismatch: if M.cols != N.rows
    """
    if M.cols != N.rows:
        raise DimensionMismatch(f"Cannot multiply {M.shape} by {N.shape}")
    block = M.block if M.rows == N.cols else None
    return SuperMatrix(_grid_mul(M._rows, N._rows), block)


def mat_vec(M: SuperMatrix, vector: Sequence[Scalarish]) -> Tuple[SuperScalar, ...]:
    if M.cols != len(vector):
        raise DimensionMismatch(f"Cannot apply {M.shape} matrix to a {len(vector)}-vector")
    column = [[as_scalar(x)] for x in vector]
    return tuple(row[0] for row in _grid_mul(M._rows, column))


def block_parts(M: SuperMatrix) -> Tuple[Grid, Grid, Grid, Grid]:
    """The (A, B, C, D) blocks of the even|odd split"""
    p, _ = M.block
    g = M.grid()
    return ([row[:p] for row in g[:p]], [row[p:] for row in g[:p]],
            [row[:p] for row in g[p:]], [row[p:] for row in g[p:]])


def parity_pattern_ok(M: SuperMatrix) -> bool:
    """Even entries on the diagonal blocks, odd entries off them"""
    p, _ = M.block
    for r in range(M.rows):
        for c in range(M.cols):
            wanted = Parity.EVEN if (r < p) == (c < p) else Parity.ODD
            if not has_parity(M[r, c], wanted):
                return False
    return True


def _det_grid(grid: Sequence[Sequence[SuperScalar]]) -> SuperScalar:
    """First-column Laplace expansion, entry times minor, memoised on row sets"""
    n = len(grid)
    if n == 0:
        return ONE
    cache: Dict[Tuple[int, ...], SuperScalar] = {}

    def expand(rows: Tuple[int, ...]) -> SuperScalar:
        if not rows:
            return ONE
        hit = cache.get(rows)
        if hit is not None:
            return hit
        col = n - len(rows)
        total = ZERO
        for k, r in enumerate(rows):
            entry = grid[r][col]
            if not entry:
                continue
            term = mul(entry, expand(rows[:k] + rows[k + 1:]))
            total = add(total, -term if k % 2 else term)
        cache[rows] = total
        return total

    return expand(tuple(range(n)))


def det_first_column(M: SuperMatrix) -> SuperScalar:
    """Determinant expanded along the first column at every level

    Cofactor sign is (-1)^(r+1) for 1-based row r and each term is the entry
    times its minor.  Agrees with the ordinary determinant when all entries
    are even; with odd entries it is only meaningful when they sit in a
    single column.

    Raises:
        DimensionMismatch: if M is not square
    """
    if M.rows != M.cols:
        raise DimensionMismatch(f"Determinant of non-square {M.shape} matrix")
    return _det_grid(M._rows)


def _adjugate(grid: Sequence[Sequence[SuperScalar]]) -> Grid:
    n = len(grid)
    if n == 1:
        return [[ONE]]
    adj: Grid = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[grid[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            cofactor = _det_grid(minor)
            adj[i][j] = -cofactor if (i + j) % 2 else cofactor
    return adj


def _even_inverse(grid: Sequence[Sequence[SuperScalar]]) -> Grid:
    """Inverse of a matrix of commuting entries via adjugate / determinant"""
    det_inv = invert(_det_grid(grid))
    return [[mul(x, det_inv) for x in row] for row in _adjugate(grid)]


def _grid_sub(left: Grid, right: Grid) -> Grid:
    return [[add(x, -y) for x, y in zip(r1, r2)] for r1, r2 in zip(left, right)]


def berezinian(M: SuperMatrix) -> SuperScalar:
    """det(A - B D^-1 C) * det(D)^-1

    D^-1 is the adjugate over the even subring divided by det(D).

    Raises:
        NotInvertible: if det(D) has no unit monomial body
        DimensionMismatch: if M is not square
    """
    if M.rows != M.cols:
        raise DimensionMismatch(f"Berezinian of non-square {M.shape} matrix")
    A, B, C, D = block_parts(M)
    if not D:
        return _det_grid(A)
    det_d_inv = invert(_det_grid(D))
    if not A:
        return det_d_inv
    schur = _grid_sub(A, _grid_mul(_grid_mul(B, _even_inverse(D)), C))
    return mul(_det_grid(schur), det_d_inv)


def block_inverse(M: SuperMatrix) -> SuperMatrix:
    """Two-sided inverse through the Schur complement of the odd block"""
    p, q = M.block
    A, B, C, D = block_parts(M)
    if q == 0:
        return SuperMatrix(_even_inverse(A), M.block)
    d_inv = _even_inverse(D)
    if p == 0:
        return SuperMatrix(d_inv, M.block)
    s_inv = _even_inverse(_grid_sub(A, _grid_mul(_grid_mul(B, d_inv), C)))
    top_right = [[-x for x in row] for row in _grid_mul(_grid_mul(s_inv, B), d_inv)]
    bottom_left = [[-x for x in row] for row in _grid_mul(_grid_mul(d_inv, C), s_inv)]
    correction = _grid_mul(_grid_mul(_grid_mul(_grid_mul(d_inv, C), s_inv), B), d_inv)
    bottom_right = [[add(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(d_inv, correction)]
    rows = [s_inv[r] + top_right[r] for r in range(p)]
    rows += [bottom_left[r] + bottom_right[r] for r in range(q)]
    return SuperMatrix(rows, M.block)


def _osp_entries(M: SuperMatrix):
    (a, b, gamma), (c, d, delta), (alpha, beta, e) = M._rows
    return a, b, gamma, c, d, delta, alpha, beta, e


def is_osp12(M: SuperMatrix) -> bool:
    """Membership in OSp(1|2): parity pattern plus the defining relations

    ad - bc = 1 - alpha beta, e = 1 + alpha beta,
    -a delta + c gamma = alpha, -b delta + d gamma = beta.
    """
    if M.shape != (3, 3) or M.block != (2, 1):
        return False
    if not parity_pattern_ok(M):
        return False
    a, b, gamma, c, d, delta, alpha, beta, e = _osp_entries(M)
    ab = mul(alpha, beta)
    return (
        a * d - b * c == ONE - ab
        and e == ONE + ab
        and -(a * delta) + c * gamma == alpha
        and -(b * delta) + d * gamma == beta
    )


def osp_implied_relations(M: SuperMatrix) -> List[SuperScalar]:
    """Residuals of gamma = a beta - b alpha, delta = c beta - d alpha, alpha beta = gamma delta"""
    a, b, gamma, c, d, delta, alpha, beta, e = _osp_entries(M)
    return [
        gamma - (a * beta - b * alpha),
        delta - (c * beta - d * alpha),
        alpha * beta - gamma * delta,
    ]


def osp_inverse(M: SuperMatrix) -> SuperMatrix:
    """Inverse of an OSp(1|2) element

    Raises:
        NotInGroup: if M fails is_osp12
    """
    if not is_osp12(M):
        raise NotInGroup(f"Not an OSp(1|2) element: {M!r}")
    return block_inverse(M)
