"""Bounded complexes of free graded modules."""

from dataclasses import dataclass, field

from mfkit.algorithms.factorization import Report, check_map_degrees, compare_matrices
from mfkit.utilities.errors import DimensionMismatchError, GradingError
from mfkit.utilities.linalg import rank
from mfkit.utilities.matrix import block, zeros
from mfkit.utilities.ring import monomials_of_degree


@dataclass(frozen=True)
class FreeComplex:
    """
    A bounded complex A_lo -> ... -> A_hi of free modules with ascending differentials.

    Args:
        ring: `GradedRing` - Base ring.
        lo: `int` - Lowest index.
        hi: `int` - Highest index.
        modules: `dict` - Index -> `tuple` of twists, missing indices are zero modules.
        diffs: `dict` - Index i -> `PolyMatrix` d_i : A_{i-1} -> A_i.
    """

    ring: object
    lo: int
    hi: int
    modules: dict = field(default_factory=dict)
    diffs: dict = field(default_factory=dict)

    def module(self, i):
        return tuple(self.modules.get(i, ()))

    def rank(self, i):
        return len(self.module(i))

    def diff(self, i):
        """d_i : A_{i-1} -> A_i, a zero matrix where none is stored."""
        if i in self.diffs:
            return self.diffs[i]
        return zeros(self.ring, self.rank(i), self.rank(i - 1))

    @property
    def indices(self):
        return range(self.lo, self.hi + 1)

    def __eq__(self, other):
        if not isinstance(other, FreeComplex) or self.ring != other.ring:
            return False
        span = range(min(self.lo, other.lo), max(self.hi, other.hi) + 2)
        return all(self.module(i) == other.module(i) and self.diff(i) == other.diff(i) for i in span)

    __hash__ = None


def make_complex(
        ring,
        modules,
        diffs
    ):
    """
    Builds a complex, dropping empty modules and checking the differential shapes.

    Args:
        ring: `GradedRing` - Base ring.
        modules: `dict` - Index -> twists.
        diffs: `dict` - Index i -> d_i.
    """

    modules = {i: tuple(t) for i, t in modules.items() if len(t)}
    indices = list(modules) or [0]
    lo, hi = min(indices), max(indices)
    for i, d in diffs.items():
        shape = (len(modules.get(i, ())), len(modules.get(i - 1, ())))
        if d.shape != shape:
            raise DimensionMismatchError('d_{0} has shape {1}, expected {2}'.format(i, d.shape, shape))
    diffs = {i: d for i, d in diffs.items() if not d.is_zero()}
    return FreeComplex(ring, lo, hi, modules, diffs)


def zero_complex(ring):
    return FreeComplex(ring, 0, 0, {}, {})


def validate_complex(
        A,
        graded=True
    ):
    """
    Checks d_{i+1} d_i = 0 and, in graded mode, that every differential has degree zero.

    Args:
        A: `FreeComplex` - Complex to check.
        graded: `bool` - Whether to check homogeneity.
    """

    report = Report('complex')
    for i in range(A.lo, A.hi):
        composite = A.diff(i + 1) @ A.diff(i)
        compare_matrices(report, 'd_{0}*d_{1}'.format(i + 1, i), composite, zeros(A.ring, *composite.shape))
    if graded:
        for i in range(A.lo + 1, A.hi + 1):
            check_map_degrees(report, 'd_{0}'.format(i), A.ring, A.diff(i), A.module(i), A.module(i - 1))
    return report


def negate(A):
    """The same complex with every differential negated."""
    return FreeComplex(A.ring, A.lo, A.hi, dict(A.modules), {i: -d for i, d in A.diffs.items()})


def base_change_complex(A, target, images):
    """Entrywise ring map of every differential."""
    return FreeComplex(target, A.lo, A.hi, dict(A.modules),
                       {i: d.base_change(target, images) for i, d in A.diffs.items()})


def check_chain_map(
        report,
        name,
        source,
        target,
        maps
    ):
    """
    Records the indices where `maps` fails to commute with the differentials.

    Args:
        report: `Report` - Collects failures.
        name: `str` - Label used in the report.
        source: `FreeComplex` - Source complex.
        target: `FreeComplex` - Target complex.
        maps: `dict` - Index -> map source_i -> target_i.
    """

    ring = source.ring

    def component(i):
        if i in maps:
            return maps[i]
        return zeros(ring, target.rank(i), source.rank(i))

    for i in range(min(source.lo, target.lo), max(source.hi, target.hi) + 1):
        compare_matrices(report, '{0} at {1}'.format(name, i),
                         target.diff(i + 1) @ component(i), component(i + 1) @ source.diff(i + 1))


def shift_complex(A, n=1):
    """
    The shifted complex A[n], with A[n]_i = A_{i+n} and differentials multiplied by (-1)^n.

    Args:
        A: `FreeComplex` - Complex to shift.
        n: `int` - Number of shifts.
    """

    return FreeComplex(A.ring, A.lo - n, A.hi - n, {i - n: t for i, t in A.modules.items()},
                       {i - n: -d if n % 2 else d for i, d in A.diffs.items()})


def cone_complex(
        source,
        target,
        maps
    ):
    """
    The mapping cone of a chain map f : A -> B.

    Args:
        source: `FreeComplex` - A.
        target: `FreeComplex` - B.
        maps: `dict` - Index -> f_i : A_i -> B_i, missing components are zero.

    Notes:

    * Cone_i = A_{i+1} + B_i with d_i = [[-d^A_{i+1}, 0], [f_i, d^B_i]].
    """

    ring = source.ring

    def component(i):
        if i in maps:
            return maps[i]
        return zeros(ring, target.rank(i), source.rank(i))

    lo = min(source.lo - 1, target.lo)
    hi = max(source.hi - 1, target.hi)
    modules = {i: source.module(i + 1) + target.module(i) for i in range(lo, hi + 1)}
    diffs = {}
    for i in range(lo + 1, hi + 1):
        diffs[i] = block(ring, [[-source.diff(i + 1), None], [component(i), target.diff(i)]],
                         [source.rank(i + 1), target.rank(i)], [source.rank(i), target.rank(i - 1)])
    return make_complex(ring, modules, diffs)


def _piece(ring, twists, degree):
    return [(k, monom) for k, a in enumerate(twists) for monom in monomials_of_degree(ring, a + degree)]


def _piece_rows(ring, D, source_piece, target_piece):
    domain = ring.domain
    index = {c: k for k, c in enumerate(target_piece)}
    rows = [[domain.zero] * len(source_piece) for _ in target_piece]
    for column, (j, monom) in enumerate(source_piece):
        e = ring.poly_ring.from_dict({monom: domain.one})
        for i in range(D.rows):
            if D[i, j]:
                for m, c in (D[i, j] * e).terms():
                    rows[index[(i, m)]][column] += c
    return rows


def homology_dims(
        A,
        degree
    ):
    """
    Dimensions of the homology of a graded complex in one internal degree.

    Args:
        A: `FreeComplex` - Complex with homogeneous differentials of degree zero.
        degree: `int` - Internal degree, R(a) contributes the monomials of degree a + degree.

    Notes:

    * Returns index -> dim H_i, computed exactly over the coefficient field.
    """

    ring = A.ring
    domain = ring.domain
    pieces = {i: _piece(ring, A.module(i), degree) for i in range(A.lo - 1, A.hi + 2)}
    ranks = {}
    for i in range(A.lo, A.hi + 2):
        try:
            rows = _piece_rows(ring, A.diff(i), pieces[i - 1], pieces[i])
        except KeyError:
            raise GradingError('d_{0} is not homogeneous of degree zero'.format(i))
        ranks[i] = rank(rows, len(pieces[i - 1]), domain)
    return {i: len(pieces[i]) - ranks[i + 1] - ranks[i] for i in A.indices}


def check_exact(
        A,
        degrees
    ):
    """Records every index and internal degree where the complex has homology."""
    report = Report('exactness')
    for t in degrees:
        for i, dim in homology_dims(A, t).items():
            if dim:
                report.failures.append('H_{0} has dimension {1} in degree {2}'.format(i, dim, t))
    return report
