"""The dg Hom complex between factorizations and the Hom groups of the homotopy category."""

from dataclasses import dataclass, field

from mfkit.algorithms.factorization import (
    FactMorphism, Homotopy, Report, check_homotopy, cone_inclusion, cone_projection, identity_morphism, shift,
    shift_morphism, validate_morphism, zero_morphism,
)
from mfkit.utilities.errors import GradingError, MfkitError, RingMismatchError
from mfkit.utilities.linalg import exact_solve, extend_basis, nullspace, rank
from mfkit.utilities.matrix import PolyMatrix
from mfkit.utilities.ring import format_poly, monomials_of_degree, monomials_up_to, total_degree


M1 = 'm1'
ZERO = '0'


@dataclass(frozen=True)
class HomSlice:
    """
    One homogeneous piece of Hom^n(E, F) together with its differential.

    Args:
        source: `Factorization` - E.
        target: `Factorization` - F.
        n: `int` - Cohomological degree.
        degree: `int` - Internal degree, `None` in capped mode.
        cap: `int` - Bound on the total degree of the entries, `None` in graded mode.
        coordinates: `tuple` - Basis (block, i, j, exponents) of pairs E^-1 -> F[n]^-1, E^0 -> F[n]^0.
        next_coordinates: `tuple` - Basis of the slice of degree n + 1 receiving the differential.
        differential: `tuple` of `tuple` - Field matrix, one row per entry of `next_coordinates`.

    Notes:

    * Graded slices are complete, capped slices are truncations and make every derived answer approximate.
    """

    source: object
    target: object
    n: int
    degree: int
    cap: int
    coordinates: tuple
    next_coordinates: tuple
    differential: tuple

    @property
    def dim(self):
        return len(self.coordinates)

    @property
    def graded(self):
        return self.cap is None

    @property
    def shifted_target(self):
        return shift(self.target, self.n)

    def element(self, vector):
        """The pair (g^-1, g^0) with the given coordinates."""
        return pair_from_vector(self.source, self.shifted_target, self.coordinates, vector)

    def vector(self, gm1, g0):
        """Coordinates of a pair of matrices in this slice."""
        return vector_from_pair(self.source.ring, _index(self.coordinates), gm1, g0)


@dataclass(frozen=True)
class HomClasses:
    """
    Hom from E to F[n] in the homotopy category at one internal degree.

    Args:
        n: `int` - Cohomological degree.
        degree: `int` - Internal degree, `None` in capped mode.
        dim: `int` - Dimension over the coefficient field.
        representatives: `list` of `FactMorphism` - Closed maps E -> F[n] independent modulo exact ones.
        certified: `bool` - False when the answer comes from a truncated slice.
        kernel_dim: `int` - Dimension of the closed elements.
        image_dim: `int` - Dimension of the exact elements.
    """

    n: int
    degree: int
    dim: int
    representatives: list = field(default_factory=list)
    certified: bool = True
    kernel_dim: int = 0
    image_dim: int = 0
    cap: int = None


@dataclass(frozen=True)
class HomotopySearch:
    """
    Outcome of a homotopy search.

    Args:
        witness: `Homotopy` - A homotopy, `None` when none was found.
        certified: `bool` - Whether absence is proven, always True when a witness exists.
    """

    witness: Homotopy = None
    certified: bool = True

    @property
    def found(self):
        return self.witness is not None


def _check_pair(E, F):
    if E.ring != F.ring:
        raise RingMismatchError('factorizations over {0} and {1}'.format(E.ring, F.ring))
    if E.w != F.w:
        raise RingMismatchError('potentials {0} and {1} differ'.format(format_poly(E.w), format_poly(F.w)))


def _index(coordinates):
    return {c: k for k, c in enumerate(coordinates)}


def max_entry_degree(*factorizations):
    """Largest total degree of an entry of the structure maps, zero when all vanish."""
    degrees = [0]
    for E in factorizations:
        for matrix in (E.phi0, E.phim1):
            degrees.extend(total_degree(p) for _, _, p in matrix.nonzero_entries())
    return max(degrees)


def default_cap(E, F):
    """deg w + max entry degree + 2."""
    return max(total_degree(E.w), 0) + max_entry_degree(E, F) + 2


def slice_coordinates(
        E,
        Fn,
        degree=None,
        cap=None
    ):
    """
    Basis of the pairs E^-1 -> Fn^-1, E^0 -> Fn^0 of internal degree `degree` or total degree at most `cap`.

    Notes:

    * Entry (i, j) of a map sum R(a_j) -> sum R(b_i) of degree t runs over monomials of degree b_i - a_j + t.
    """

    ring = E.ring
    coordinates = []
    for name, targets, sources in ((M1, Fn.e1, E.e1), (ZERO, Fn.e0, E.e0)):
        for i, b in enumerate(targets):
            for j, a in enumerate(sources):
                if cap is None:
                    exponents = monomials_of_degree(ring, b - a + degree)
                else:
                    exponents = monomials_up_to(ring, cap)
                coordinates.extend((name, i, j, monom) for monom in exponents)
    return tuple(coordinates)


def pair_from_vector(
        E,
        Fn,
        coordinates,
        vector
    ):
    """Assembles (g^-1, g^0) from coordinates."""
    ring = E.ring
    grids = {M1: [[{} for _ in E.e1] for _ in Fn.e1], ZERO: [[{} for _ in E.e0] for _ in Fn.e0]}
    for (name, i, j, monom), c in zip(coordinates, vector):
        if c:
            grids[name][i][j][monom] = c
    matrices = []
    for name, rows, cols in ((M1, len(Fn.e1), len(E.e1)), (ZERO, len(Fn.e0), len(E.e0))):
        entries = tuple(tuple(ring.poly_ring.from_dict(terms) if terms else ring.zero for terms in row)
                        for row in grids[name])
        matrices.append(PolyMatrix(ring, rows, cols, entries))
    return matrices[0], matrices[1]


def vector_from_pair(
        ring,
        index,
        gm1,
        g0
    ):
    """Coordinates of a pair, raises `GradingError` on a term outside the slice."""
    vector = [ring.domain.zero] * len(index)
    for name, matrix in ((M1, gm1), (ZERO, g0)):
        for i, j, p in matrix.nonzero_entries():
            for monom, coeff in p.terms():
                key = (name, i, j, monom)
                if key not in index:
                    raise GradingError('term {0} of {1} entry ({2},{3}) lies outside the slice'.format(
                        list(monom), name, i, j))
                vector[index[key]] = coeff
    return vector


def dg_differential(
        E,
        Fn,
        gm1,
        g0
    ):
    """
    The differential of a pair g in Hom^n(E, F), with Fn = F[n].

    Notes:

    * D(g)^-1 = phi^0_F[n] g^-1 - g^0 phi^0_E
    * D(g)^0 = phi^-1_F[n] g^0 - g^-1 phi^-1_E
    * D(g) = 0 exactly when g is a morphism E -> F[n].
    * The usual D(g) = phi_F g - (-1)^n g phi_E is taken without the (-1)^n, the sign of the shift sits in the
      differentials of F[n]. D still squares to zero and its cycles are the morphisms E -> F[n].
    """

    return Fn.phi0 @ gm1 - g0 @ E.phi0, Fn.phim1 @ g0 - gm1 @ E.phim1


def _differential_rows(E, Fn, coordinates, next_coordinates):
    ring = E.ring
    domain = ring.domain
    index = _index(next_coordinates)
    rows = [[domain.zero] * len(coordinates) for _ in next_coordinates]

    def add(name, i, j, p, column):
        for monom, coeff in p.terms():
            key = (name, i, j, monom)
            if key not in index:
                raise GradingError('differential leaves the next slice at {0}'.format(key))
            rows[index[key]][column] = rows[index[key]][column] + coeff

    for column, (name, i, j, monom) in enumerate(coordinates):
        e = ring.poly_ring.from_dict({monom: domain.one})
        if name == M1:
            # phi^0_F[n] g^-1 and - g^-1 phi^-1_E
            for k in range(len(Fn.e0)):
                if Fn.phi0[k, i]:
                    add(M1, k, j, Fn.phi0[k, i] * e, column)
            for l in range(len(E.e0)):
                if E.phim1[j, l]:
                    add(ZERO, i, l, -(e * E.phim1[j, l]), column)
        else:
            # - g^0 phi^0_E and phi^-1_F[n] g^0
            for l in range(len(E.e1)):
                if E.phi0[j, l]:
                    add(M1, i, l, -(e * E.phi0[j, l]), column)
            for k in range(len(Fn.e1)):
                if Fn.phim1[k, i]:
                    add(ZERO, k, j, Fn.phim1[k, i] * e, column)
    return tuple(tuple(r) for r in rows)


def hom_slice(
        E,
        F,
        n,
        degree=None,
        cap=None
    ):
    """
    The piece of Hom^n(E, F) of internal degree `degree`, or of entries of total degree at most `cap`.

    Args:
        E: `Factorization` - Source.
        F: `Factorization` - Target.
        n: `int` - Cohomological degree.
        degree: `int` - Internal degree, graded mode only.
        cap: `int` - Total degree cap, used when either side is ungraded.

    Notes:

    * In capped mode the next slice is capped at `cap` plus the largest entry degree so the differential fits.
    """

    _check_pair(E, F)
    graded = E.graded and F.graded
    if graded:
        if degree is None:
            raise GradingError('graded slices need an internal degree')
        cap = None
    elif cap is None:
        cap = default_cap(E, F)

    Fn, Fn1 = shift(F, n), shift(F, n + 1)
    coordinates = slice_coordinates(E, Fn, degree, cap)
    next_cap = None if cap is None else cap + max_entry_degree(E, F)
    next_coordinates = slice_coordinates(E, Fn1, degree, next_cap)
    differential = _differential_rows(E, Fn, coordinates, next_coordinates)
    return HomSlice(E, F, n, degree if graded else None, cap, coordinates, next_coordinates, differential)


def _columns(slice_):
    return [tuple(row[k] for row in slice_.differential) for k in range(slice_.dim)]


def _previous_slice(E, F, n, degree, cap):
    if cap is None:
        return hom_slice(E, F, n - 1, degree)
    return hom_slice(E, F, n - 1, cap=cap - max_entry_degree(E, F))


def hom_classes(
        E,
        F,
        n,
        degree=None,
        cap=None
    ):
    """
    Hom_K(E, F[n]) at one internal degree, as closed pairs modulo exact pairs.

    Args:
        E: `Factorization` - Source.
        F: `Factorization` - Target.
        n: `int` - Cohomological degree.
        degree: `int` - Internal degree, graded mode only.
        cap: `int` - Total degree cap in ungraded mode.

    Notes:

    * dim = dim ker D_n - rank D_(n-1), both exact over the coefficient field.
    * Representatives are returned as morphisms E -> F[n].
    """

    current = hom_slice(E, F, n, degree, cap)
    domain = E.ring.domain
    cap = current.cap

    # Closed elements
    kernel = nullspace([list(r) for r in current.differential], current.dim, domain)

    # Exact elements
    previous = _previous_slice(E, F, n, degree, cap)
    if previous.next_coordinates != current.coordinates:
        raise MfkitError('slices of degree {0} and {1} do not line up'.format(n - 1, n))
    image = _columns(previous)
    image_rank = rank([list(v) for v in image], current.dim, domain)

    # Classes
    chosen = extend_basis(image, kernel, current.dim, domain)
    Fn = current.shifted_target
    representatives = []
    for k in chosen:
        gm1, g0 = current.element(kernel[k])
        representatives.append(FactMorphism(E, Fn, g0, gm1, degree if current.graded else 0))
    return HomClasses(n, current.degree, len(kernel) - image_rank, representatives, current.graded,
                      len(kernel), image_rank, cap)


def hom_table(
        E,
        F,
        ns,
        degrees=None,
        cap=None
    ):
    """
    Hom dimensions over a window.

    Args:
        E: `Factorization` - Source.
        F: `Factorization` - Target.
        ns: `list` of `int` - Cohomological degrees.
        degrees: `list` of `int` - Internal degrees, graded mode only.
        cap: `int` - Total degree cap in ungraded mode.

    Notes:

    * Returns a dict keyed by (n, degree), with degree `None` in capped mode.
    """

    table = {}
    graded = E.graded and F.graded
    for n in ns:
        for t in (degrees if graded else [None]):
            table[(n, t)] = hom_classes(E, F, n, t, cap)
    return table


def periodicity_check(
        E,
        F,
        n,
        degree
    ):
    """
    Compares Hom^(n+2) at degree t with Hom^n at degree t + deg w.

    Notes:

    * F[2] is F twisted once by Phi, which moves every entry degree by deg w.
    """

    if not (E.graded and F.graded):
        raise GradingError('periodicity up to twist needs graded mode')
    report = Report('periodicity')
    d = E.degree
    upper = hom_classes(E, F, n + 2, degree).dim
    lower = hom_classes(E, F, n, degree + d).dim
    if upper != lower:
        report.failures.append('Hom^{0} at {1} has dim {2}, Hom^{3} at {4} has dim {5}'.format(
            n + 2, degree, upper, n, degree + d, lower))
    return report


def solve_homotopy(
        g1,
        g2,
        degree=None,
        cap=None
    ):
    """
    Looks for h with g1 - g2 = h phi_E + phi_F h.

    Args:
        g1: `FactMorphism` - First morphism E -> F.
        g2: `FactMorphism` - Second morphism with the same endpoints.
        degree: `int` - Internal degree, taken from g1 when omitted.
        cap: `int` - Total degree cap in ungraded mode.

    Notes:

    * h lives in Hom^-1(E, F), whose coordinates are exactly (h^-1, h^0), and D(h) = g2 - g1.
    * In graded mode a failed search certifies absence, in ungraded mode it only rules out witnesses up to the cap.
    """

    if g1.source != g2.source or g1.target != g2.target:
        raise MfkitError('homotopies need morphisms with the same endpoints')
    E, F = g1.source, g1.target
    graded = E.graded and F.graded
    if graded:
        degree = g1.degree if degree is None else degree
    else:
        entries = [total_degree(p) for g in (g1, g2) for m in (g.g0, g.gm1) for _, _, p in m.nonzero_entries()]
        needed = max(entries + [0])
        cap = max(default_cap(E, F), needed) if cap is None else cap

    # Solve D(h) = g2 - g1 in the coordinates of Hom^0
    previous = hom_slice(E, F, -1, degree, cap)
    domain = E.ring.domain
    try:
        b = vector_from_pair(E.ring, _index(previous.next_coordinates), g2.gm1 - g1.gm1, g2.g0 - g1.g0)
    except GradingError:
        return HomotopySearch(None, False)
    solution = exact_solve([list(r) for r in previous.differential], b, domain, ncols=previous.dim)
    if not solution.consistent:
        return HomotopySearch(None, graded)

    hm1, h0 = previous.element(solution.particular)
    h = Homotopy(h0, hm1)
    check_homotopy(g1, g2, h).raise_if_invalid()
    return HomotopySearch(h, True)


def is_contractible(
        E,
        cap=None
    ):
    """
    Whether the identity of E is null-homotopic.

    Notes:

    * Returns `(answer, witness)`. The identity has internal degree zero, so one slice decides it in graded mode.
    """

    search = solve_homotopy(identity_morphism(E), zero_morphism(E, E), 0 if E.graded else None, cap)
    return search.found, search.witness


def orthogonality_check(
        P,
        C,
        ns=(0, 1),
        degrees=range(-3, 4),
        cap=None
    ):
    """
    Checks that Hom_K(P, C[n]) vanishes over a window.

    Args:
        P: `Factorization` - Factorization with free components.
        C: `Factorization` - Expected to be acyclic in the relevant sense.
        ns: `list` of `int` - Cohomological degrees.
        degrees: `list` of `int` - Internal degrees.
        cap: `int` - Total degree cap in ungraded mode.
    """

    report = Report('orthogonality')
    for (n, t), classes in hom_table(P, C, ns, list(degrees), cap).items():
        if classes.dim:
            report.failures.append('Hom^{0} at degree {1} has dim {2}'.format(n, t, classes.dim))
    return report


def postcompose_rank(
        X,
        g,
        n,
        degree
    ):
    """
    Rank of g_* : Hom_K(X, A[n]) -> Hom_K(X, B[n]) at internal degree `degree`.

    Args:
        X: `Factorization` - Fixed source.
        g: `FactMorphism` - Morphism A -> B.
        n: `int` - Cohomological degree.
        degree: `int` - Internal degree of the source classes.
    """

    if not (X.graded and g.source.graded and g.target.graded):
        raise GradingError('induced maps are computed in graded mode only')
    validate_morphism(g).raise_if_invalid()
    domain = X.ring.domain
    classes = hom_classes(X, g.source, n, degree)
    target_degree = degree + g.degree
    target = hom_slice(X, g.target, n, target_degree)
    exact = _columns(_previous_slice(X, g.target, n, target_degree, None))
    gn = shift_morphism(g, n)
    images = [target.vector(gn.gm1 @ r.gm1, gn.g0 @ r.g0) for r in classes.representatives]
    exact_rows = [list(v) for v in exact]
    return rank(exact_rows + images, target.dim, domain) - rank(exact_rows, target.dim, domain)


def long_exact_check(
        X,
        g,
        ns,
        degrees
    ):
    """
    Rank bookkeeping of Hom_K(X, -) along the triangle A -> B -> C(g) -> A[1].

    Notes:

    * At every term of the long exact sequence the dimension equals the rank in plus the rank out.
    """

    report = Report('long exact sequence')
    i, p = cone_inclusion(g), cone_projection(g)
    A, B, C = g.source, g.target, i.target
    for n in ns:
        for t in degrees:
            r_g = postcompose_rank(X, g, n, t)
            r_i = postcompose_rank(X, i, n, t)
            r_p = postcompose_rank(X, p, n, t)
            r_g_next = postcompose_rank(X, g, n + 1, t)
            checks = (('B', hom_classes(X, B, n, t).dim, r_g + r_i),
                      ('C', hom_classes(X, C, n, t).dim, r_i + r_p),
                      ('A[1]', hom_classes(X, A, n + 1, t).dim, r_p + r_g_next))
            for name, dim, expected in checks:
                if dim != expected:
                    report.failures.append('Hom^{0}(X, {1}) at {2}: dim {3}, ranks give {4}'.format(
                        n, name, t, dim, expected))
    return report
