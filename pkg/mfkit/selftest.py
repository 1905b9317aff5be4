"""Batch verification of the example registry and of randomized populations."""

import random

from sympy import Matrix, Poly, Symbol, linear_eq_to_matrix, symbols

from mfkit.algorithms.complex import FreeComplex, check_exact
from mfkit.algorithms.corpus import REGISTRY, STAB_VARS, id_chain, mf_pair, split_ses, stab_koszul
from mfkit.algorithms.factorization import (
    Report, base_change, base_change_morphism, compose, cone, cone_inclusion, cone_projection, contractible_envelope,
    direct_sum, identity_morphism, make_factorization, shift, twist, validate_factorization, zero_morphism,
)
from mfkit.algorithms.fold import (
    FoldBlocks, fold, fold_cone, fold_report, shift_fold, stabilize, stabilize_data, totalize, unfold,
)
from mfkit.algorithms.hom import hom_classes, is_contractible, orthogonality_check, solve_homotopy
from mfkit.algorithms.koszul import check_koszul, koszul_complex
from mfkit.algorithms.spectral import (
    DERIVED, PRINTED, direct_hom_dims, e1_page, ss_degeneration_check, variant_discrepancies,
)
from mfkit.utilities.errors import MfkitError
from mfkit.utilities.matrix import from_rows
from mfkit.utilities.print import print_check_status, print_suite_end, print_suite_start
from mfkit.utilities.ring import make_ring, monomial, monomials_of_degree, parse_poly, substitute
from mfkit.utilities.save import FACTORIZATION, Document, canonicalize, write_document


DEFAULT_SEED = 20240601
RANDOM_POPULATION = 200


# Populations

def random_homogeneous(rnd, ring, degree):
    """A homogeneous polynomial with coefficients drawn from -2..2."""
    p = ring.zero
    for monom in monomials_of_degree(ring, degree):
        c = rnd.randint(-2, 2)
        if c:
            p = p + monomial(ring, monom, c)
    return p


def random_stabilizations(
        seed=DEFAULT_SEED,
        count=RANDOM_POPULATION
    ):
    """
    Randomized Koszul stabilizations over QQ and GF(5).

    Notes:

    * Up to four variables, splitting entries of degree at most two, coefficients in -2..2.
    * Draws leading to w = 0 are redrawn, a vanishing potential has no grading to check against.
    """

    rnd = random.Random(seed)
    population = []
    while len(population) < count:
        n = rnd.randint(1, 4)
        ring = make_ring(list(STAB_VARS[:n]), field=rnd.choice([None, 5]))
        degree = rnd.randint(0, 2)
        splitting = [random_homogeneous(rnd, ring, degree) for _ in range(n)]
        w = sum((s * g for s, g in zip(splitting, ring.gens)), ring.zero)
        if not w:
            continue
        E, blocks, data = stabilize_data(ring, list(STAB_VARS[:n]), w, splitting)
        population.append((E, blocks, data))
    return population


def graded_corpus():
    """Registry examples at their default parameters plus a few stabilizations and x^d pairs."""
    objects = [entry.build()[0] for entry in REGISTRY.values()]
    objects += [mf_pair(a, d) for d in (2, 3) for a in range(0, d + 1)]
    objects += [stab_koszul(1, 'x^2'), stab_koszul(2, 'x*y')]
    return objects


def xy_pair():
    """([x], [y]) factoring xy over k[x, y]."""
    ring = make_ring('x,y')
    x, y = ring.gens
    return make_factorization(ring, x * y, from_rows(ring, [[x]]), from_rows(ring, [[y]]), e1=[-1], e0=[0])


# Brute-force oracle for rank one factorizations of x^d

def _oracle_shift(F, d):
    p0, pm1, e1, e0 = F
    return (-pm1, -p0, e0, e1 + d)


def _generic(coeff, x, degree):
    return coeff * x**degree if degree >= 0 else 0


def oracle_hom_dim(
        a,
        b,
        d,
        n,
        t
    ):
    """
    dim Hom_K(mf_pair(a, d), mf_pair(b, d)[n]) at internal degree t by undetermined coefficients.

    Notes:

    * Closed maps solve the commuting squares, exact maps are the images of all homotopies.
    """

    x = Symbol('x')
    E = (x**a, x**(d - a), -a, 0)
    F = (x**b, x**(d - b), -b, 0)
    for _ in range(n):
        F = _oracle_shift(F, d)
    Ep0, Epm1, Ee1, Ee0 = E
    Fp0, Fpm1, Fe1, Fe0 = F

    # Closed maps (g^-1, g^0)
    c1, c2 = symbols('c1 c2')
    deg_m1, deg_0 = Fe1 - Ee1 + t, Fe0 - Ee0 + t
    gm1, g0 = _generic(c1, x, deg_m1), _generic(c2, x, deg_0)
    unknowns = [c for c, deg in ((c1, deg_m1), (c2, deg_0)) if deg >= 0]
    if not unknowns:
        return 0
    equations = []
    for expr in (Fp0 * gm1 - g0 * Ep0, Fpm1 * g0 - gm1 * Epm1):
        expr = expr.expand()
        if expr != 0:
            equations.extend(Poly(expr, x).coeffs())
    if equations:
        A, _ = linear_eq_to_matrix(equations, unknowns)
        kernel = len(unknowns) - A.rank()
    else:
        kernel = len(unknowns)

    # Exact maps h^0 phi^0_E + phi^-1_F h^-1, phi^0_F h^0 + h^-1 phi^-1_E
    k0, k1 = symbols('k0 k1')
    h0 = _generic(k0, x, Fe1 - Ee0 + t)
    hm1 = _generic(k1, x, Fe0 - d - Ee1 + t)
    columns = []
    for k in (k0, k1):
        image_m1 = (h0 * Ep0 + Fpm1 * hm1).expand()
        image_0 = (Fp0 * h0 + hm1 * Epm1).expand()
        column = []
        for image, deg, present in ((image_m1, deg_m1, c1 in unknowns), (image_0, deg_0, c2 in unknowns)):
            if present:
                column.append(Poly(image, x, k0, k1).coeff_monomial(x**deg * k) if image != 0 else 0)
        columns.append(column)
    image_rank = Matrix(columns).T.rank() if columns and columns[0] else 0
    return kernel - image_rank


# Suites

def suite_axioms(population):
    checks = [('registry {0}'.format(name), entry.check()) for name, entry in REGISTRY.items()]
    checks += [('random stabilization {0}'.format(k), validate_factorization(E))
               for k, (E, _, _) in enumerate(population)]
    return checks


def suite_koszul(population):
    return [('koszul {0}'.format(k), check_koszul(data)) for k, (_, _, data) in enumerate(population)]


def _lower(blocks):
    return FoldBlocks({k: b for k, b in blocks.blocks_m1.items() if k[1] <= k[0]},
                      {k: b for k, b in blocks.blocks_0.items() if k[1] <= k[0]})


FOLD_CONE_CASES = (
    ('x', 'x^2'),
    ('x,y', 'x*y'),
    ('x,y', 'x^2 + y^2'),
    ('x,y,z', 'x*y*z'),
)


def suite_fold_cones():
    """Cones of the identity and of zero on stabilizations, read as folds of the cone complexes."""
    checks = []
    for names, text in FOLD_CONE_CASES:
        ring = make_ring(names)
        sequence = names.split(',')
        E, blocks, _ = stabilize_data(ring, sequence, parse_poly(ring, text))
        for label, eta in (('identity', identity_morphism(E)), ('zero', zero_morphism(E, E))):
            C, cone_blocks = fold_cone(eta, blocks, blocks)
            checks.append(('cone of {0} on {1} folds'.format(label, text), fold_report(C, cone_blocks)))
            if label == 'identity':
                degrees = range(0, len(sequence) + 2)
                checks.append(('cone of identity on {0} exact'.format(text), check_exact(cone_blocks.c_m1, degrees)))
                checks.append(('cone of identity on {0} exact at A^0'.format(text),
                               check_exact(cone_blocks.c_0, degrees)))
    return checks


def suite_fold(population):
    checks = []
    for k, (E, blocks, _) in enumerate(population[:40]):
        again = unfold(E, blocks.layout_m1, blocks.layout_0)
        checks.append(('refold {0}'.format(k), fold(again.c_m1, again.c_0, _lower(again), E.w, E.graded) == E))
        shifted = shift_fold(blocks)
        checks.append(('shifted fold {0}'.format(k),
                       fold(shifted.c_m1, shifted.c_0, _lower(shifted), E.w, E.graded) == shift(E, 1)))
    for k, E in enumerate(graded_corpus()):
        c_m1 = FreeComplex(E.ring, 0, 0, {0: E.e1} if E.e1 else {}, {})
        c_0 = FreeComplex(E.ring, 0, 0, {0: E.e0} if E.e0 else {}, {})
        blocks = FoldBlocks({(0, 0): E.phim1}, {(0, 0): E.phi0})
        checks.append(('degree zero fold {0}'.format(k), fold(c_m1, c_0, blocks, E.w, E.graded) == E))
    checks += suite_fold_cones()
    return checks


def suite_triangles(population):
    checks = []
    for k, E in enumerate(graded_corpus()):
        checks.append(('shift twice {0}'.format(k), shift(E, 2) == twist(E, 1)))
        checks.append(('cone of identity {0}'.format(k), is_contractible(cone(identity_morphism(E)))[0]))
        G, g = contractible_envelope(E)
        checks.append(('envelope {0}'.format(k), is_contractible(G)[0]))
        injective = g.gm1.rank() == len(E.e1) and g.g0.rank() == len(E.e0)
        checks.append(('envelope monomorphism {0}'.format(k), injective))
        for label, h in (('identity', identity_morphism(E)), ('envelope map', g)):
            i, p = cone_inclusion(h), cone_projection(h)
            composite = compose(p, i)
            checks.append(('{0} triangle {1}'.format(label, k), composite.g0.is_zero() and composite.gm1.is_zero()))
            checks.append(('{0} cone kills {1}'.format(label, k),
                           solve_homotopy(compose(i, h), zero_morphism(E, i.target)).found))
        zero = zero_morphism(E, G)
        checks.append(('cone of zero {0}'.format(k), cone(zero) == direct_sum(shift(E, 1), G)))
    return checks


def suite_orthogonality(population):
    checks = []
    targets = {'x': mf_pair(1, 2), 'xy': xy_pair()}
    for label, P, base in (('stab(x; x^2)', stab_koszul(1, 'x^2'), targets['x']),
                           ('stab(x,y; xy)', stab_koszul(2, 'x*y'), targets['xy'])):
        for name, chain in (('identity chain', id_chain(base)), ('split sequence', split_ses(base))):
            C = totalize(*chain)
            checks.append(('{0} against {1}'.format(label, name), orthogonality_check(P, C)))
    return checks


def suite_oracle(population):
    checks = []
    for d in range(2, 6):
        for a in range(0, d + 1):
            for b in range(0, d + 1):
                E, F = mf_pair(a, d), mf_pair(b, d)
                report = Report('oracle a={0} b={1} d={2}'.format(a, b, d))
                for n in (0, 1):
                    for t in range(-d, d + 1):
                        got, expected = hom_classes(E, F, n, t).dim, oracle_hom_dim(a, b, d, n, t)
                        if got != expected:
                            report.failures.append('n={0} t={1}: {2} != {3}'.format(n, t, got, expected))
                checks.append((report.subject, report))
    return checks


def suite_spectral(population):
    checks = []

    # One variable, E = (0, R/(x)): equality when every entry of F lies in (x)
    for d in (2, 3):
        ring = make_ring('x')
        w = monomial(ring, [d])
        P = stabilize(ring, ['x'], w)
        resolutions = (FreeComplex(ring, 0, 0, {}, {}), koszul_complex(ring, ['x']))
        for a in range(0, d + 1):
            F = mf_pair(a, d)
            for t in range(-d - 1, d + 2):
                table = e1_page(resolutions, F, t, range(-2, 3))
                verdict = ss_degeneration_check(table, direct_hom_dims(P, F, range(-2, 3), t))
                reduced = 0 < a < d
                checks.append(('R/(x) into mf_pair({0},{1}) at {2}'.format(a, d, t),
                               verdict.report.valid and (verdict.degenerates or not reduced)))

    # Two variables, E = (0, R/(x, y)): the inequality must hold
    ring = make_ring('x,y')
    x, y = ring.gens
    P = stabilize(ring, ['x', 'y'], x * y)
    resolutions = (FreeComplex(ring, 0, 0, {}, {}), koszul_complex(ring, ['x', 'y']))
    for label, F in (('stab(x,y; xy)', P), ('([x],[y])', xy_pair())):
        for t in range(-3, 4):
            table = e1_page(resolutions, F, t, range(-2, 3))
            verdict = ss_degeneration_check(table, direct_hom_dims(P, F, range(-2, 3), t))
            checks.append(('R/(x,y) into {0} at {1}'.format(label, t), verdict.report))

    # The printed closed formula undercounts Hom for R/(x) into mf_pair(1, 2), the derived one does not
    ring = make_ring('x')
    P = stabilize(ring, ['x'], monomial(ring, [2]))
    resolutions = (FreeComplex(ring, 0, 0, {}, {}), koszul_complex(ring, ['x']))
    printed = variant_discrepancies(resolutions, P, mf_pair(1, 2), range(-3, 4), range(-2, 3), PRINTED)
    derived = variant_discrepancies(resolutions, P, mf_pair(1, 2), range(-3, 4), range(-2, 3), DERIVED)
    checks.append(('printed formula below dim Hom in {0} places'.format(len(printed)),
                   'internal degree 0, total degree 0: E_1 sum 0 < dim Hom 1' in printed))
    checks.append(('derived formula bounds dim Hom', not derived))
    return checks


def _canonical(E):
    return write_document(Document(E.ring, E.w, E.graded, FACTORIZATION, E))


def suite_base_change(population):
    checks = []

    # x -> t, y -> t
    target = make_ring('t')
    t = target.gens[0]
    images = [t, t]
    E = xy_pair()
    tw = t**2

    def bc(F):
        return base_change(F, target, images, tw)

    g = identity_morphism(E)
    checks.append(('cone commutes',
                   _canonical(bc(cone(g))) == _canonical(cone(base_change_morphism(g, target, images, tw)))))
    checks.append(('shift commutes', _canonical(bc(shift(E, 1))) == _canonical(shift(bc(E), 1))))
    checks.append(('direct sum commutes', _canonical(bc(direct_sum(E, E))) == _canonical(direct_sum(bc(E), bc(E)))))
    stab = stab_koszul(2, 'x*y')
    checks.append(('stabilization maps', validate_factorization(bc(stab)).valid))

    # QQ -> GF(5)
    for label, ring_q in (('x', make_ring('x')), ('x,y', make_ring('x,y'))):
        ring_p = make_ring(list(ring_q.vars), field=5)
        images_p = list(ring_p.gens)
        w_q = sum((g**2 for g in ring_q.gens), ring_q.zero)
        w_p = substitute(ring_q, ring_p, w_q, images_p)
        names = list(ring_q.vars)
        reduced = base_change(stabilize(ring_q, names, w_q), ring_p, images_p, w_p)
        checks.append(('stabilize commutes over {0}'.format(label),
                       _canonical(reduced) == _canonical(stabilize(ring_p, names, w_p))))
        E_q = stabilize(ring_q, names, w_q)
        E_p = base_change(E_q, ring_p, images_p, w_p)
        checks.append(('shift commutes mod 5 over {0}'.format(label),
                       _canonical(base_change(shift(E_q, 1), ring_p, images_p, w_p)) == _canonical(shift(E_p, 1))))
        checks.append(('cone commutes mod 5 over {0}'.format(label),
                       _canonical(base_change(cone(identity_morphism(E_q)), ring_p, images_p, w_p))
                       == _canonical(cone(identity_morphism(E_p)))))
    return checks


def suite_documents(population):
    checks = []
    for name, entry in REGISTRY.items():
        text = _canonical(entry.build()[0])
        checks.append(('canonical {0}'.format(name), canonicalize(text) == text))
    return checks


SUITES = (
    ('factorization axioms', suite_axioms),
    ('koszul identities', suite_koszul),
    ('fold identities', suite_fold),
    ('triangulated structure', suite_triangles),
    ('orthogonality', suite_orthogonality),
    ('graded hom oracle', suite_oracle),
    ('spectral sequence', suite_spectral),
    ('base change', suite_base_change),
    ('documents', suite_documents),
)


def run_selftest(
        seed=DEFAULT_SEED,
        suites=None,
        verbose=True
    ):
    """
    Runs the selected suites and returns the number of failed checks.

    Args:
        seed: `int` - Seed of the randomized population.
        suites: `list` of `int` - One based suite numbers, all suites when omitted.
        verbose: `bool` - If `True`, progress and failures are printed.
    """

    population = random_stabilizations(seed)
    failed = 0
    for number, (name, suite) in enumerate(SUITES, start=1):
        if suites and number not in suites:
            continue
        if verbose:
            print_suite_start('{0}. {1}'.format(number, name))
        try:
            checks = suite(population)
        except MfkitError as error:
            checks = [(name, Report(name, [str(error)]))]
        passed = 0
        for index, (label, outcome) in enumerate(checks, start=1):
            if verbose:
                print_check_status(index, len(checks), label)
            if bool(outcome):
                passed += 1
            elif verbose:
                print('\nFAILED {0}'.format(label))
                if isinstance(outcome, Report):
                    print(str(outcome))
        failed += len(checks) - passed
        if verbose:
            print_suite_end(name, passed, len(checks))
    return failed
