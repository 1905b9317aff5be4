"""Matrices with polynomial entries."""

from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from .errors import DimensionMismatchError, RingMismatchError
from .ring import format_poly, substitute


@dataclass(frozen=True)
class PolyMatrix:
    """
    Dense matrix of polynomials acting on column vectors.

    Args:
        ring: `GradedRing` - Ring of the entries.
        rows: `int` - Number of rows.
        cols: `int` - Number of columns.
        entries: `tuple` of `tuple` - Row-major grid of `PolyElement`.

    Notes:

    * `f @ g` is the composite "first g, then f".
    """

    ring: object
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError('entry grid does not match {0}x{1}'.format(self.rows, self.cols))

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    @property
    def shape(self):
        return self.rows, self.cols

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError('matrices over different rings')

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError('cannot add {0} and {1}'.format(self.shape, other.shape))
        return PolyMatrix(self.ring, self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self):
        return self.map(lambda p: -p)

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatchError('cannot compose {0} after {1}'.format(self.shape, other.shape))
        zero = self.ring.zero
        result = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                total = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            total = total + a * b
                row.append(total)
            result.append(tuple(row))
        return PolyMatrix(self.ring, self.rows, other.cols, tuple(result))

    def scale(self, p):
        """Multiplies every entry by the polynomial or scalar `p`."""
        return self.map(lambda q: q * p)

    def map(self, fn):
        return PolyMatrix(self.ring, self.rows, self.cols, tuple(
            tuple(fn(p) for p in row) for row in self.entries))

    def is_zero(self):
        return all(not p for row in self.entries for p in row)

    def submatrix(self, row_indices, col_indices):
        return PolyMatrix(self.ring, len(row_indices), len(col_indices), tuple(
            tuple(self.entries[i][j] for j in col_indices) for i in row_indices))

    def rank(self):
        """Rank over the fraction field of the polynomial ring."""
        if not self.rows or not self.cols:
            return 0
        domain = self.ring.poly_ring.to_domain()
        M = DomainMatrix([list(row) for row in self.entries], self.shape, domain)
        return M.to_field().rank()

    def nonzero_entries(self):
        for i, row in enumerate(self.entries):
            for j, p in enumerate(row):
                if p:
                    yield i, j, p

    def base_change(self, target, images):
        """Entrywise ring map into `target`."""
        return PolyMatrix(target, self.rows, self.cols, tuple(
            tuple(substitute(self.ring, target, p, images) for p in row) for row in self.entries))

    def __str__(self):
        if not self.rows or not self.cols:
            return '[{0}x{1}]'.format(self.rows, self.cols)
        return '\n'.join('[' + ', '.join(format_poly(p) for p in row) + ']' for row in self.entries)


def zeros(ring, rows, cols):
    """Zero matrix."""
    return PolyMatrix(ring, rows, cols, tuple(tuple(ring.zero for _ in range(cols)) for _ in range(rows)))


def identity(ring, n):
    """Identity matrix."""
    return scalar(ring, n, ring.one)


def scalar(ring, n, p):
    """`p` times the identity matrix."""
    return PolyMatrix(ring, n, n, tuple(
        tuple(p if i == j else ring.zero for j in range(n)) for i in range(n)))


def from_rows(ring, rows, ncols=None):
    """
    Builds a matrix from nested lists of polynomials or integers.

    Args:
        ring: `GradedRing` - Ring of the entries.
        rows: `list` of `list` - Row-major entries.
        ncols: `int` - Column count, needed when there are no rows.
    """

    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pr = ring.poly_ring
    return PolyMatrix(ring, len(rows), ncols, tuple(tuple(pr(p) for p in row) for row in rows))


def block(ring, grid, row_sizes, col_sizes):
    """
    Assembles a block matrix.

    Args:
        ring: `GradedRing` - Ring of the entries.
        grid: `list` of `list` - Blocks, `None` stands for a zero block.
        row_sizes: `list` of `int` - Row count of each block row.
        col_sizes: `list` of `int` - Column count of each block column.
    """

    rows = []
    for bi, nrows in enumerate(row_sizes):
        for r in range(nrows):
            row = []
            for bj, ncols in enumerate(col_sizes):
                blk = grid[bi][bj]
                if blk is None:
                    row.extend(ring.zero for _ in range(ncols))
                else:
                    if blk.shape != (nrows, ncols):
                        raise DimensionMismatchError('block ({0},{1}) has shape {2}, expected {3}'.format(
                            bi, bj, blk.shape, (nrows, ncols)))
                    row.extend(blk.entries[r])
            rows.append(tuple(row))
    return PolyMatrix(ring, sum(row_sizes), sum(col_sizes), tuple(rows))


def direct_sum(ring, *matrices):
    """Block diagonal matrix."""
    grid = [[m if i == j else None for j in range(len(matrices))] for i, m in enumerate(matrices)]
    return block(ring, grid, [m.rows for m in matrices], [m.cols for m in matrices])


def embed(ring, blk, rows, cols, row_indices, col_indices):
    """Places `blk` at the given row and column positions of a zero matrix."""
    grid = [[ring.zero for _ in range(cols)] for _ in range(rows)]
    for a, i in enumerate(row_indices):
        for b, j in enumerate(col_indices):
            grid[i][j] = blk.entries[a][b]
    return PolyMatrix(ring, rows, cols, tuple(tuple(r) for r in grid))
