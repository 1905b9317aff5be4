"""Factorizations of a potential over free graded modules."""

from dataclasses import dataclass, field

from mfkit.utilities.errors import GradingError, RingMismatchError, ValidationError
from mfkit.utilities.matrix import PolyMatrix, block, direct_sum as matrix_sum, identity, scalar, zeros
from mfkit.utilities.ring import check_same_ring, format_poly, homogeneous_degree, is_homogeneous_of, substitute


@dataclass(frozen=True)
class Factorization:
    """
    A factorization (E^-1, E^0, phi^-1, phi^0) of a potential w with free components.

    Args:
        ring: `GradedRing` - Base ring.
        w: `PolyElement` - Potential.
        e1: `tuple` of `int` - Twists of the generators of E^-1, the i-th one spans R(e1[i]).
        e0: `tuple` of `int` - Twists of the generators of E^0.
        phi0: `PolyMatrix` - Map E^-1 -> E^0.
        phim1: `PolyMatrix` - Map Phi^-1(E^0) -> E^-1.
        graded: `bool` - Whether Phi is the twist by deg w (True) or the identity (False).

    Notes:

    * Phi acts on matrices as the identity, only the twists move.
    * In ungraded mode the twists are carried along but never checked.
    """

    ring: object
    w: object
    e1: tuple
    e0: tuple
    phi0: PolyMatrix
    phim1: PolyMatrix
    graded: bool = True

    @property
    def degree(self):
        """Degree d of the potential, the amount by which Phi twists. Zero in ungraded mode."""
        if not self.graded:
            return 0
        d, is_zero = homogeneous_degree(self.ring, self.w)
        if is_zero:
            return 0
        if d is None:
            raise GradingError('potential {0} is not homogeneous'.format(format_poly(self.w)))
        return d

    @property
    def ranks(self):
        return len(self.e1), len(self.e0)

    def __str__(self):
        return 'Factorization of {0} over {1}, ranks {2}\nphi0:\n{3}\nphim1:\n{4}'.format(
            format_poly(self.w), self.ring, self.ranks, self.phi0, self.phim1)


@dataclass(frozen=True)
class FactMorphism:
    """
    A morphism g = (g^-1, g^0) of factorizations.

    Args:
        source: `Factorization` - Source E.
        target: `Factorization` - Target F.
        g0: `PolyMatrix` - Map E^0 -> F^0.
        gm1: `PolyMatrix` - Map E^-1 -> F^-1.
        degree: `int` - Internal degree of the entries in graded mode.
    """

    source: Factorization
    target: Factorization
    g0: PolyMatrix
    gm1: PolyMatrix
    degree: int = 0


@dataclass(frozen=True)
class Homotopy:
    """
    A homotopy h = (h^-1, h^0) between two morphisms E -> F.

    Args:
        h0: `PolyMatrix` - Map E^0 -> F^-1.
        hm1: `PolyMatrix` - Map E^-1 -> Phi^-1(F^0).
    """

    h0: PolyMatrix
    hm1: PolyMatrix

    def __neg__(self):
        return Homotopy(-self.h0, -self.hm1)

    def __add__(self, other):
        return Homotopy(self.h0 + other.h0, self.hm1 + other.hm1)


@dataclass
class Report:
    """
    Outcome of a verification.

    Args:
        subject: `str` - What was checked.
        failures: `list` of `str` - One line per failed identity, empty when everything holds.
    """

    subject: str
    failures: list = field(default_factory=list)

    @property
    def valid(self):
        return not self.failures

    def __bool__(self):
        return self.valid

    def raise_if_invalid(self):
        if self.failures:
            raise ValidationError('{0} is invalid'.format(self.subject), self.failures)

    def __str__(self):
        if self.valid:
            return '{0}: valid'.format(self.subject)
        return '{0}: invalid\n'.format(self.subject) + '\n'.join('  ' + f for f in self.failures)


def compare_matrices(
        report,
        name,
        left,
        right
    ):
    """Records every entry where `left` and `right` disagree."""
    if left.shape != right.shape:
        report.failures.append('{0}: shape {1} != {2}'.format(name, left.shape, right.shape))
        return
    for i in range(left.rows):
        for j in range(left.cols):
            if left[i, j] != right[i, j]:
                report.failures.append('{0}[{1},{2}]: {3} != {4}'.format(
                    name, i, j, format_poly(left[i, j]), format_poly(right[i, j])))


def check_map_degrees(
        report,
        name,
        ring,
        matrix,
        target_twists,
        source_twists,
        degree=0
    ):
    """
    Records entries that are not homogeneous of the degree forced by the twists.

    Notes:

    * A map sum R(a_j) -> sum R(b_i) of internal degree t needs entry (i, j) of degree b_i - a_j + t.
    """

    for i, j, p in matrix.nonzero_entries():
        expected = target_twists[i] - source_twists[j] + degree
        if not is_homogeneous_of(ring, p, expected):
            report.failures.append('{0}[{1},{2}]: {3} is not homogeneous of degree {4}'.format(
                name, i, j, format_poly(p), expected))


def make_factorization(
        ring,
        w,
        phi0,
        phim1,
        e1=None,
        e0=None,
        graded=True
    ):
    """
    Builds a factorization, twists default to zero for every generator.

    Args:
        ring: `GradedRing` - Base ring.
        w: `PolyElement` - Potential.
        phi0: `PolyMatrix` - Map E^-1 -> E^0.
        phim1: `PolyMatrix` - Map Phi^-1(E^0) -> E^-1.
        e1: `list` of `int` - Twists of E^-1.
        e0: `list` of `int` - Twists of E^0.
        graded: `bool` - Graded mode flag.
    """

    e1 = tuple(e1) if e1 is not None else (0,) * phi0.cols
    e0 = tuple(e0) if e0 is not None else (0,) * phi0.rows
    return Factorization(ring, w, e1, e0, phi0, phim1, graded)


def validate_factorization(E):
    """
    Checks both factorization identities and, in graded mode, every homogeneity constraint.

    Args:
        E: `Factorization` - Factorization to check.

    Notes:

    * Never raises on invalid input, the returned `Report` lists each failure.
    """

    report = Report('factorization')
    r1, r0 = E.ranks

    # Shapes
    if E.phi0.shape != (r0, r1):
        report.failures.append('phi0: shape {0}, expected {1}'.format(E.phi0.shape, (r0, r1)))
    if E.phim1.shape != (r1, r0):
        report.failures.append('phim1: shape {0}, expected {1}'.format(E.phim1.shape, (r1, r0)))
    if report.failures:
        return report

    # Both composites equal w times the identity
    compare_matrices(report, 'phi0*phim1', E.phi0 @ E.phim1, scalar(E.ring, r0, E.w))
    compare_matrices(report, 'phim1*phi0', E.phim1 @ E.phi0, scalar(E.ring, r1, E.w))

    # Homogeneity in graded mode
    if E.graded:
        d, is_zero = homogeneous_degree(E.ring, E.w)
        if d is None and not is_zero:
            report.failures.append('w: {0} is not homogeneous'.format(format_poly(E.w)))
            return report
        d = d or 0
        check_map_degrees(report, 'phi0', E.ring, E.phi0, E.e0, E.e1)
        check_map_degrees(report, 'phim1', E.ring, E.phim1, E.e1, [a - d for a in E.e0])

    return report


def validate_morphism(g):
    """
    Checks that both squares of a morphism commute.

    Args:
        g: `FactMorphism` - Morphism to check.
    """

    E, F = g.source, g.target
    report = Report('morphism')
    if E.ring != F.ring or E.w != F.w:
        report.failures.append('source and target factor different potentials')
        return report
    if g.gm1.shape != (len(F.e1), len(E.e1)) or g.g0.shape != (len(F.e0), len(E.e0)):
        report.failures.append('shapes {0}, {1} do not match the components'.format(g.gm1.shape, g.g0.shape))
        return report

    compare_matrices(report, 'phi0_F*gm1 - g0*phi0_E', F.phi0 @ g.gm1, g.g0 @ E.phi0)
    compare_matrices(report, 'phim1_F*g0 - gm1*phim1_E', F.phim1 @ g.g0, g.gm1 @ E.phim1)

    if E.graded and F.graded:
        check_map_degrees(report, 'gm1', E.ring, g.gm1, F.e1, E.e1, g.degree)
        check_map_degrees(report, 'g0', E.ring, g.g0, F.e0, E.e0, g.degree)

    return report


def check_homotopy(
        g1,
        g2,
        h
    ):
    """
    Checks that `h` is a homotopy between `g1` and `g2`.

    Notes:

    * g1^-1 - g2^-1 = h^0 phi^0_E + phi^-1_F h^-1
    * g1^0 - g2^0 = phi^0_F h^0 + h^-1 phi^-1_E
    """

    E, F = g1.source, g1.target
    report = Report('homotopy')
    compare_matrices(report, 'gm1 difference', g1.gm1 - g2.gm1, h.h0 @ E.phi0 + F.phim1 @ h.hm1)
    compare_matrices(report, 'g0 difference', g1.g0 - g2.g0, F.phi0 @ h.h0 + h.hm1 @ E.phim1)
    return report


def zero_factorization(ring, w, graded=True):
    """The zero factorization of `w`."""
    return Factorization(ring, w, (), (), zeros(ring, 0, 0), zeros(ring, 0, 0), graded)


def shift(E, n):
    """
    The n-fold shift E[n].

    Args:
        E: `Factorization` - Factorization to shift.
        n: `int` - Number of shifts, negative values invert.

    Notes:

    * E[1] = (E^0, Phi(E^-1), -phi^0, -Phi(phi^-1)).
    * E[-1] = (Phi^-1(E^0), E^-1, -phi^0, -phi^-1) in the same slot order.
    """

    d = E.degree
    result = E
    for _ in range(abs(n)):
        if n > 0:
            e1, e0 = result.e0, tuple(a + d for a in result.e1)
        else:
            e1, e0 = tuple(a - d for a in result.e0), result.e1
        result = Factorization(E.ring, E.w, e1, e0, -result.phim1, -result.phi0, E.graded)
    return result


def shift_morphism(g, n):
    """The shifted morphism g[n] : E[n] -> F[n]."""
    g0, gm1 = g.g0, g.gm1
    for _ in range(abs(n)):
        g0, gm1 = gm1, g0
    return FactMorphism(shift(g.source, n), shift(g.target, n), g0, gm1, g.degree)


def twist(E, m):
    """
    Applies Phi^m, which moves every twist by m * deg w.

    Args:
        E: `Factorization` - Factorization to twist.
        m: `int` - Power of Phi.
    """

    if not E.graded:
        raise GradingError('twisting needs graded mode')
    d = E.degree
    return Factorization(E.ring, E.w, tuple(a + m * d for a in E.e1), tuple(a + m * d for a in E.e0),
                         E.phi0, E.phim1, E.graded)


def twist_module(E, m):
    """Moves the twists by `m` without touching Phi, i.e. E tensored with R(m)."""
    return Factorization(E.ring, E.w, tuple(a + m for a in E.e1), tuple(a + m for a in E.e0),
                         E.phi0, E.phim1, E.graded)


def _check_compatible(E, F):
    if E.ring != F.ring:
        raise RingMismatchError('factorizations over {0} and {1}'.format(E.ring, F.ring))
    if E.w != F.w:
        raise RingMismatchError('potentials {0} and {1} differ'.format(format_poly(E.w), format_poly(F.w)))


def direct_sum(*factorizations):
    """
    Block diagonal direct sum of factorizations of the same potential.

    Args:
        factorizations: `Factorization` - Summands, at least one.
    """

    first = factorizations[0]
    for F in factorizations[1:]:
        _check_compatible(first, F)
    ring = first.ring
    return Factorization(
        ring, first.w,
        tuple(a for F in factorizations for a in F.e1),
        tuple(a for F in factorizations for a in F.e0),
        matrix_sum(ring, *[F.phi0 for F in factorizations]),
        matrix_sum(ring, *[F.phim1 for F in factorizations]),
        all(F.graded for F in factorizations))


def identity_morphism(E):
    return FactMorphism(E, E, identity(E.ring, len(E.e0)), identity(E.ring, len(E.e1)))


def zero_morphism(E, F, degree=0):
    _check_compatible(E, F)
    return FactMorphism(E, F, zeros(E.ring, len(F.e0), len(E.e0)), zeros(E.ring, len(F.e1), len(E.e1)), degree)


def add_morphisms(f, g):
    return FactMorphism(f.source, f.target, f.g0 + g.g0, f.gm1 + g.gm1, f.degree)


def compose(g, f):
    """
    The composite g o f.

    Args:
        g: `FactMorphism` - Second map F -> G.
        f: `FactMorphism` - First map E -> F.
    """

    if f.target != g.source:
        raise RingMismatchError('target of the first map is not the source of the second')
    return FactMorphism(f.source, g.target, g.g0 @ f.g0, g.gm1 @ f.gm1, f.degree + g.degree)


def cone(g):
    """
    The cone C(g) of a morphism g: E -> F.

    Args:
        g: `FactMorphism` - Morphism, validated before use.

    Notes:

    * Components are E^0 + F^-1 and Phi(E^-1) + F^0.
    * phi^-1 = [[-phi^0_E, 0], [g^-1, phi^-1_F]], phi^0 = [[-phi^-1_E, 0], [g^0, phi^0_F]].
    """

    validate_morphism(g).raise_if_invalid()
    E, F = g.source, g.target
    ring, d = E.ring, E.degree
    r1, r0 = E.ranks
    s1, s0 = F.ranks
    phim1 = block(ring, [[-E.phi0, None], [g.gm1, F.phim1]], [r0, s1], [r1, s0])
    phi0 = block(ring, [[-E.phim1, None], [g.g0, F.phi0]], [r1, s0], [r0, s1])
    return Factorization(ring, E.w, E.e0 + F.e1, tuple(a + d for a in E.e1) + F.e0, phi0, phim1,
                         E.graded and F.graded)


def cone_inclusion(g):
    """The canonical morphism F -> C(g)."""
    C = cone(g)
    E, F = g.source, g.target
    ring = E.ring
    r1, r0 = E.ranks
    s1, s0 = F.ranks
    gm1 = block(ring, [[None], [identity(ring, s1)]], [r0, s1], [s1])
    g0 = block(ring, [[None], [identity(ring, s0)]], [r1, s0], [s0])
    return FactMorphism(F, C, g0, gm1)


def cone_projection(g):
    """The canonical morphism C(g) -> E[1]."""
    C = cone(g)
    E, F = g.source, g.target
    ring = E.ring
    r1, r0 = E.ranks
    s1, s0 = F.ranks
    gm1 = block(ring, [[identity(ring, r0), None]], [r0], [r0, s1])
    g0 = block(ring, [[identity(ring, r1), None]], [r1], [r1, s0])
    return FactMorphism(C, shift(E, 1), g0, gm1)


def contractible_envelope(E):
    """
    The null-homotopic factorization G^-(E) and the monomorphism E -> G^-(E).

    Args:
        E: `Factorization` - Factorization with free components.

    Notes:

    * G^-1 = E^-1 + E^0 and G^0 = E^0 + Phi(E^-1).
    * phi^0 = [[0, 1], [w, 0]] and phi^-1 = [[0, 1], [w, 0]] with the blocks sized accordingly.
    * The monomorphism is (1, phi^0_E) on E^-1 and (1, phi^-1_E) on E^0.
    """

    ring, w, d = E.ring, E.w, E.degree
    r1, r0 = E.ranks
    phi0 = block(ring, [[None, identity(ring, r0)], [scalar(ring, r1, w), None]], [r0, r1], [r1, r0])
    phim1 = block(ring, [[None, identity(ring, r1)], [scalar(ring, r0, w), None]], [r1, r0], [r0, r1])
    G = Factorization(ring, w, E.e1 + E.e0, E.e0 + tuple(a + d for a in E.e1), phi0, phim1, E.graded)
    gm1 = block(ring, [[identity(ring, r1)], [E.phi0]], [r1, r0], [r1])
    g0 = block(ring, [[identity(ring, r0)], [E.phim1]], [r0, r1], [r0])
    return G, FactMorphism(E, G, g0, gm1)


def base_change(
        E,
        target,
        images,
        target_w,
        graded=None
    ):
    """
    Pushes a factorization along the ring map sending each variable to its image.

    Args:
        E: `Factorization` - Factorization over the source ring.
        target: `GradedRing` - Target ring.
        images: `list` of `PolyElement` - Image of each source variable in `target`.
        target_w: `PolyElement` - Potential over the target, must equal the image of w.
        graded: `bool` - Graded flag of the result, inherited from E when omitted.

    Notes:

    * In graded mode each image must be homogeneous of the weight of its variable, so twists carry over unchanged.
    """

    check_same_ring(target, target_w, *images)
    if graded is None:
        graded = E.graded

    # The ring map must carry w to the target potential
    mapped = substitute(E.ring, target, E.w, images)
    if mapped != target_w:
        raise RingMismatchError('the ring map sends w to {0}, not {1}'.format(
            format_poly(mapped), format_poly(target_w)))

    # Weights must match in graded mode
    if graded:
        for name, weight, image in zip(E.ring.vars, E.ring.weights, images):
            if not is_homogeneous_of(target, image, weight):
                raise GradingError('image {0} of {1} is not homogeneous of degree {2}'.format(
                    format_poly(image), name, weight))

    return Factorization(target, target_w, E.e1, E.e0,
                         E.phi0.base_change(target, images), E.phim1.base_change(target, images), graded)


def base_change_morphism(
        g,
        target,
        images,
        target_w
    ):
    """Pushes a morphism along a ring map, see `base_change`."""
    return FactMorphism(base_change(g.source, target, images, target_w),
                        base_change(g.target, target, images, target_w),
                        g.g0.base_change(target, images), g.gm1.base_change(target, images), g.degree)
