from mfkit.algorithms.corpus import envelope, mf_pair
from mfkit.algorithms.factorization import (
    Factorization, check_homotopy, cone, contractible_envelope, direct_sum, identity_morphism, make_factorization,
    shift, validate_factorization, validate_morphism, zero_morphism,
)
from mfkit.algorithms.fold import stabilize
from mfkit.algorithms.hom import (
    dg_differential, hom_classes, hom_slice, hom_table, is_contractible, long_exact_check, orthogonality_check,
    periodicity_check, solve_homotopy,
)
from mfkit.utilities.matrix import from_rows
from mfkit.utilities.ring import make_ring


def x_squared(graded=True):
    ring = make_ring('x')
    x = ring.gens[0]
    return make_factorization(ring, x**2, from_rows(ring, [[x]]), from_rows(ring, [[x]]), e1=[-1], e0=[0],
                              graded=graded)


def xy_stabilization():
    ring = make_ring('x,y')
    x, y = ring.gens
    return stabilize(ring, ['x', 'y'], x * y)


def test_slice_and_classes():
    E = x_squared()
    current = hom_slice(E, E, 0, 0)
    assert current.dim == 2
    classes = hom_classes(E, E, 0, 0)
    assert classes.kernel_dim == 1
    assert classes.image_dim == 0
    assert classes.dim == 1
    assert classes.certified
    assert validate_morphism(classes.representatives[0]).valid


def test_differential_squares_to_zero():
    E, F = mf_pair(1, 3), mf_pair(2, 3)
    domain = E.ring.domain
    for t in range(-2, 3):
        first, second = hom_slice(E, F, 0, t), hom_slice(E, F, 1, t)
        assert first.next_coordinates == second.coordinates
        for row in second.differential:
            for k in range(first.dim):
                total = domain.zero
                for a, column in zip(row, first.differential):
                    total += a * column[k]
                assert total == 0


def test_self_hom_of_pairs():
    assert hom_classes(mf_pair(1, 3), mf_pair(1, 3), 0, 0).dim == 1
    assert hom_classes(mf_pair(0, 3), mf_pair(0, 3), 0, 0).dim == 0


def test_shift_compatibility():
    E, F = mf_pair(1, 3), mf_pair(2, 3)
    for n in (-1, 0, 1):
        for t in (-1, 0, 1):
            assert hom_classes(E, F, n + 1, t).dim == hom_classes(E, shift(F, 1), n, t).dim


def test_periodicity():
    E, F = mf_pair(1, 3), mf_pair(2, 3)
    for t in range(-3, 2):
        assert periodicity_check(E, F, 0, t).valid


def test_invariance_under_conjugation():
    E = xy_stabilization()
    ring = E.ring
    U, U_inv = from_rows(ring, [[1, 1], [0, 1]]), from_rows(ring, [[1, -1], [0, 1]])
    V, V_inv = from_rows(ring, [[1, 0], [1, 1]]), from_rows(ring, [[1, 0], [-1, 1]])
    conjugate = Factorization(ring, E.w, E.e1, E.e0, V @ E.phi0 @ U_inv, U @ E.phim1 @ V_inv)
    assert validate_factorization(conjugate).valid
    for n in (0, 1):
        for t in (-1, 0, 1):
            assert hom_classes(conjugate, E, n, t).dim == hom_classes(E, E, n, t).dim


def test_contractible_objects():
    assert is_contractible(envelope(1, 3))[0]
    assert is_contractible(cone(identity_morphism(mf_pair(1, 3))))[0]
    assert is_contractible(mf_pair(0, 3))[0]
    assert not is_contractible(mf_pair(1, 3))[0]
    assert not is_contractible(xy_stabilization())[0]


def test_contractibility_of_sums():
    assert is_contractible(direct_sum(mf_pair(0, 3), envelope(1, 3)))[0]
    assert not is_contractible(direct_sum(mf_pair(1, 3), envelope(1, 3)))[0]


def test_solve_homotopy():
    E = x_squared()
    found = solve_homotopy(identity_morphism(E), identity_morphism(E))
    assert found.found
    assert found.witness.h0.is_zero()
    absent = solve_homotopy(identity_morphism(E), zero_morphism(E, E))
    assert not absent.found
    assert absent.certified


def test_orthogonality_to_envelope():
    G = envelope(2, 3)
    assert orthogonality_check(mf_pair(1, 3), G).valid
    assert not orthogonality_check(mf_pair(1, 3), mf_pair(1, 3)).valid


def test_long_exact_sequence():
    X = mf_pair(1, 3)
    g = contractible_envelope(mf_pair(2, 3))[1]
    assert long_exact_check(X, g, [0, 1], range(-2, 3)).valid
    assert long_exact_check(X, identity_morphism(mf_pair(1, 3)), [0], range(-1, 2)).valid


def test_hom_table_keys():
    E, F = mf_pair(1, 3), mf_pair(2, 3)
    table = hom_table(E, F, [0, 1], [-1, 0])
    assert set(table) == {(0, -1), (0, 0), (1, -1), (1, 0)}


def test_ungraded_classes_are_not_certified():
    E = x_squared(graded=False)
    classes = hom_classes(E, E, 0)
    assert classes.dim == 1
    assert not classes.certified
    assert classes.cap == 5
    table = hom_table(E, E, [0, 1])
    assert set(table) == {(0, None), (1, None)}


def test_ungraded_homotopy_search():
    E = x_squared(graded=False)
    absent = solve_homotopy(identity_morphism(E), zero_morphism(E, E))
    assert not absent.found
    assert not absent.certified
    assert is_contractible(direct_sum(E, E))[0] is False


def test_homotopy_relation_is_symmetric_and_additive():
    E = mf_pair(1, 3)
    G, g = contractible_envelope(E)
    zero = zero_morphism(E, G)
    found = solve_homotopy(g, zero)
    assert found.found
    h = found.witness
    assert check_homotopy(g, zero, h).valid
    assert check_homotopy(zero, g, -h).valid
    assert check_homotopy(g, g, h + (-h)).valid


def test_dg_differential_squares_to_zero():
    E, F = mf_pair(1, 3), mf_pair(2, 3)
    x = E.ring.gens[0]
    gm1, g0 = from_rows(E.ring, [[x + 1]]), from_rows(E.ring, [[x**2]])
    for n in (0, 1, 2, 3):
        first = dg_differential(E, shift(F, n), gm1, g0)
        assert all(D.is_zero() for D in dg_differential(E, shift(F, n + 1), *first))
    g = identity_morphism(E)
    assert all(D.is_zero() for D in dg_differential(E, E, g.gm1, g.g0))
