"""Exact dense linear algebra over the coefficient field."""

from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from .errors import DimensionMismatchError


@dataclass(frozen=True)
class LinearSolution:
    """
    Solution set of a linear system A v = b.

    Args:
        particular: `tuple` or `None` - One exact solution, `None` when the system is inconsistent.
        nullspace_basis: `tuple` of `tuple` - Basis of the kernel of A.
    """

    particular: tuple
    nullspace_basis: tuple

    @property
    def consistent(self):
        return self.particular is not None


def _check_rows(A, ncols):
    for row in A:
        if len(row) != ncols:
            raise DimensionMismatchError('ragged matrix: expected {0} columns, got {1}'.format(ncols, len(row)))


def rref(
        A,
        ncols,
        domain
    ):
    """
    Reduced row echelon form.

    Args:
        A: `list` of `list` - Rows of domain elements.
        ncols: `int` - Number of columns, needed when A has no rows.
        domain: sympy domain - Coefficient field.

    Notes:

    * Returns `(rows, pivots)` where `rows` only keeps the nonzero rows.
    """

    _check_rows(A, ncols)

    # Nothing to eliminate
    if not A or ncols == 0:
        return [], ()

    # Eliminate with sympy
    M = DomainMatrix([list(row) for row in A], (len(A), ncols), domain)
    R, pivots = M.rref()
    rows = R.to_list()[:len(pivots)]
    return rows, tuple(pivots)


def rank(
        A,
        ncols,
        domain
    ):
    """Rank of a matrix given by its rows."""
    return len(rref(A, ncols, domain)[1])


def nullspace(
        A,
        ncols,
        domain
    ):
    """
    Kernel basis of A.

    Notes:

    * One basis vector per free column, with a one in that column.
    """

    rows, pivots = rref(A, ncols, domain)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [domain.zero] * ncols
        v[free] = domain.one
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return basis


def exact_solve(
        A,
        b,
        domain,
        ncols=None
    ):
    """
    Solves A v = b exactly by Gaussian elimination.

    Args:
        A: `list` of `list` - Rows of domain elements.
        b: `list` - Right hand side, one entry per row of A.
        domain: sympy domain - Coefficient field.
        ncols: `int` - Number of unknowns, required when A has no rows.
    """

    if ncols is None:
        if not A:
            raise DimensionMismatchError('the number of unknowns is required for an empty system')
        ncols = len(A[0])
    if len(b) != len(A):
        raise DimensionMismatchError('right hand side has {0} entries for {1} equations'.format(len(b), len(A)))
    _check_rows(A, ncols)

    # Row reduce the augmented matrix
    augmented = [list(row) + [rhs] for row, rhs in zip(A, b)]
    rows, pivots = rref(augmented, ncols + 1, domain)

    # A pivot in the last column means 0 = 1
    if pivots and pivots[-1] == ncols:
        particular = None
    else:
        v = [domain.zero] * ncols
        for row, p in zip(rows, pivots):
            v[p] = row[ncols]
        particular = tuple(v)

    return LinearSolution(particular, tuple(nullspace(A, ncols, domain)))


def matvec(A, v, domain):
    """Matrix times vector."""
    result = []
    for row in A:
        total = domain.zero
        for a, x in zip(row, v):
            if a and x:
                total += a * x
        result.append(total)
    return result


def extend_basis(
        spanning,
        candidates,
        ncols,
        domain
    ):
    """
    Picks candidates that are independent modulo the span of `spanning`.

    Args:
        spanning: `list` of `tuple` - Vectors spanning the subspace to work modulo.
        candidates: `list` of `tuple` - Vectors to choose from, in order.
        ncols: `int` - Vector length.
        domain: sympy domain - Coefficient field.

    Notes:

    * Returns the indices of the chosen candidates.
    """

    current = [list(v) for v in spanning]
    current_rank = rank(current, ncols, domain)
    chosen = []
    for index, v in enumerate(candidates):
        trial = current + [list(v)]
        trial_rank = rank(trial, ncols, domain)
        if trial_rank > current_rank:
            current, current_rank = trial, trial_rank
            chosen.append(index)
    return chosen
