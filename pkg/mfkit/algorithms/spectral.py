"""Ext between components and the first page of the Hom spectral sequence."""

from dataclasses import dataclass, field

from mfkit.algorithms.complex import FreeComplex
from mfkit.algorithms.factorization import Report, shift
from mfkit.algorithms.hom import hom_classes
from mfkit.algorithms.koszul import koszul_complex
from mfkit.utilities.errors import GradingError, MfkitError
from mfkit.utilities.linalg import nullspace, rank
from mfkit.utilities.ring import monomials_of_degree


DERIVED = 'derived'
PRINTED = 'printed'


@dataclass
class E1Table:
    """
    Dimensions of the E_1 page at one internal degree.

    Args:
        entries: `dict` - (p, q) -> dimension, zero entries are left out.
        degree: `int` - Internal degree.
        variant: `str` - `'derived'` or `'printed'`.
        total_degrees: `list` of `int` - Total degrees r = p + q covered by the table.
        twists: `dict` - (p, q) -> twists of the target components used for that entry.
    """

    entries: dict = field(default_factory=dict)
    degree: int = 0
    variant: str = DERIVED
    total_degrees: list = field(default_factory=list)
    twists: dict = field(default_factory=dict)

    def total(self, r):
        return sum(dim for (p, q), dim in self.entries.items() if p + q == r)

    @property
    def totals(self):
        return {r: self.total(r) for r in self.total_degrees}


@dataclass
class Degeneration:
    """
    Comparison of E_1 totals with directly computed Hom dimensions.

    Args:
        report: `Report` - Failures of the inequality sum E_1 >= dim Hom.
        totals: `dict` - r -> sum of the E_1 entries of total degree r.
        direct: `dict` - r -> dim Hom(E, F[r]).
    """

    report: Report
    totals: dict
    direct: dict

    @property
    def equal(self):
        return {r: self.totals[r] == self.direct[r] for r in self.totals}

    @property
    def degenerates(self):
        return self.report.valid and all(self.equal.values())


def free_resolution(ring, twists):
    """A free module as its own resolution, concentrated in index 0."""
    if not twists:
        return FreeComplex(ring, 0, 0, {}, {})
    return FreeComplex(ring, 0, 0, {0: tuple(twists)}, {})


def free_resolutions(E):
    """Resolutions of the components of a factorization with free components."""
    return free_resolution(E.ring, E.e1), free_resolution(E.ring, E.e0)


def _hom_coordinates(ring, source, target, degree):
    coordinates = []
    for k, b in enumerate(target):
        for j, a in enumerate(source):
            coordinates.extend((k, j, m) for m in monomials_of_degree(ring, b - a + degree))
    return coordinates


def _precompose_rows(ring, D, coordinates, next_coordinates):
    domain = ring.domain
    index = {c: k for k, c in enumerate(next_coordinates)}
    rows = [[domain.zero] * len(coordinates) for _ in next_coordinates]
    for column, (k, j, monom) in enumerate(coordinates):
        e = ring.poly_ring.from_dict({monom: domain.one})
        for l in range(D.cols):
            if D[j, l]:
                for m, c in (e * D[j, l]).terms():
                    rows[index[(k, l, m)]][column] += c
    return rows


def ext_dims(
        resolution,
        twists,
        degree
    ):
    """
    Ext^i(M, N) at one internal degree for i = 0..length.

    Args:
        resolution: `FreeComplex` - Free resolution of M with P_i at index -i.
        twists: `list` of `int` - N as the free module sum R(b).
        degree: `int` - Internal degree.

    Notes:

    * Computes the cohomology of Hom(P_i, N) under precomposition with the differentials.
    """

    ring = resolution.ring
    domain = ring.domain
    if resolution.hi > 0:
        raise MfkitError('a resolution lives in nonpositive indices')
    length = -resolution.lo if resolution.modules else 0
    cochains = [_hom_coordinates(ring, resolution.module(-i), twists, degree) for i in range(length + 2)]

    # delta^i : Hom(P_i, N) -> Hom(P_(i+1), N)
    ranks, kernels = [], []
    for i in range(length + 1):
        rows = _precompose_rows(ring, resolution.diff(-i), cochains[i], cochains[i + 1])
        ranks.append(rank(rows, len(cochains[i]), domain))
        kernels.append(len(nullspace(rows, len(cochains[i]), domain)))
    return [kernels[i] - (ranks[i - 1] if i else 0) for i in range(length + 1)]


def ext_koszul(
        ring,
        sequence,
        twists,
        degree
    ):
    """
    Ext^i(R/(x_1..x_n), N) at one internal degree, resolving with the Koszul complex.

    Args:
        ring: `GradedRing` - Base ring.
        sequence: `list` of `str` - Variables x_1..x_n.
        twists: `list` of `int` - N as the free module sum R(b).
        degree: `int` - Internal degree.
    """

    return ext_dims(koszul_complex(ring, sequence), twists, degree)


def _length(resolution):
    return -resolution.lo if resolution.modules else 0


def e1_page(
        resolutions,
        F,
        degree,
        total_degrees=range(-1, 3),
        variant=DERIVED,
        rows=None
    ):
    """
    The E_1 page for Hom(E, F[r]) built from resolutions of the components of E.

    Args:
        resolutions: `tuple` of `FreeComplex` - Resolutions of E^-1 and E^0.
        F: `Factorization` - Target with free components, graded.
        degree: `int` - Internal degree.
        total_degrees: `list` of `int` - Total degrees to tabulate.
        variant: `str` - `'derived'` pairs Ext of each component with the matching component of F[q],
            `'printed'` follows the closed formula with Phi^-s twists on the components of F.
        rows: `list` of `int` - Values of p for the printed variant.

    Notes:

    * derived: E_1^{p,q} = Ext^p(E^0, F[q]^0) + Ext^p(E^-1, F[q]^-1) with p running over resolution degrees.
    * printed, p = 2s: Ext^(p+q-1)(E^-1, Phi^-s F^0) + Ext^(p+q)(E^0, Phi^-s F^0).
    * printed, p = 2s+1: Ext^(p+q-1)(E^-1, Phi^-s F^-1) + Ext^(p+q)(E^0, Phi^(-s-1) F^-1).
    * The printed rows are unbounded in p, only the given window is tabulated.
    """

    if not F.graded:
        raise GradingError('the E_1 page is computed in graded mode only')
    res_m1, res_0 = resolutions
    cache = {}

    def ext(which, twists, i):
        resolution = res_m1 if which == 'm1' else res_0
        if i < 0 or i > _length(resolution) or not resolution.modules or not twists:
            return 0
        key = (which, tuple(twists))
        if key not in cache:
            cache[key] = ext_dims(resolution, twists, degree)
        return cache[key][i]

    table = E1Table(degree=degree, variant=variant, total_degrees=list(total_degrees))
    d = F.degree
    if variant == DERIVED:
        length = max(_length(res_m1), _length(res_0))
        for r in total_degrees:
            for p in range(length + 1):
                q = r - p
                Fq = shift(F, q)
                dim = ext('0', Fq.e0, p) + ext('m1', Fq.e1, p)
                table.twists[(p, q)] = (Fq.e1, Fq.e0)
                if dim:
                    table.entries[(p, q)] = dim
    elif variant == PRINTED:
        length = max(_length(res_m1), _length(res_0))
        rows = range(-2 * (length + 1), 2 * (length + 1) + 1) if rows is None else rows
        for r in total_degrees:
            for p in rows:
                q = r - p
                s = p // 2
                if p % 2 == 0:
                    first = tuple(b - s * d for b in F.e0)
                    second = first
                else:
                    first = tuple(b - s * d for b in F.e1)
                    second = tuple(b - (s + 1) * d for b in F.e1)
                dim = ext('m1', first, p + q - 1) + ext('0', second, p + q)
                table.twists[(p, q)] = (first, second)
                if dim:
                    table.entries[(p, q)] = dim
    else:
        raise MfkitError('unknown E_1 variant {0!r}'.format(variant))
    return table


def direct_hom_dims(
        P,
        F,
        total_degrees,
        degree
    ):
    """dim Hom(P, F[r]) at one internal degree for each r."""
    return {r: hom_classes(P, F, r, degree).dim for r in total_degrees}


def ss_degeneration_check(
        table,
        direct
    ):
    """
    Checks sum E_1 >= dim Hom in every total degree and flags where equality holds.

    Args:
        table: `E1Table` - First page.
        direct: `dict` - r -> dim Hom(E, F[r]) at the same internal degree.
    """

    missing = [r for r in table.total_degrees if r not in direct]
    if missing:
        raise MfkitError('no direct Hom dimension for total degrees {0}'.format(missing))
    report = Report('spectral sequence ({0})'.format(table.variant))
    totals = table.totals
    for r in table.total_degrees:
        if totals[r] < direct[r]:
            report.failures.append('total degree {0}: E_1 sum {1} < dim Hom {2}'.format(r, totals[r], direct[r]))
    return Degeneration(report, totals, {r: direct[r] for r in table.total_degrees})


def variant_discrepancies(
        resolutions,
        P,
        F,
        degrees,
        total_degrees,
        variant=PRINTED
    ):
    """
    Every place where an E_1 variant falls below the Hom dimensions it should bound.

    Args:
        resolutions: `tuple` of `FreeComplex` - Resolutions of E^-1 and E^0.
        P: `Factorization` - Free replacement of E.
        F: `Factorization` - Target.
        degrees: `list` of `int` - Internal degrees.
        total_degrees: `list` of `int` - Total degrees.
        variant: `str` - E_1 variant to compare.

    Notes:

    * Returns one line per (internal degree, total degree) with sum E_1 < dim Hom(P, F[r]).
    """

    found = []
    for t in degrees:
        table = e1_page(resolutions, F, t, total_degrees, variant)
        verdict = ss_degeneration_check(table, direct_hom_dims(P, F, total_degrees, t))
        found.extend('internal degree {0}, {1}'.format(t, failure) for failure in verdict.report.failures)
    return found
