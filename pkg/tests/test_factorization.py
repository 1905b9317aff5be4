import pytest

from mfkit.algorithms.factorization import (
    FactMorphism, Factorization, base_change, base_change_morphism, compose, cone, cone_inclusion, cone_projection,
    contractible_envelope, direct_sum, identity_morphism, make_factorization, shift, shift_morphism, twist,
    validate_factorization, validate_morphism, zero_morphism,
)
from mfkit.utilities.errors import GradingError, RingMismatchError, ValidationError
from mfkit.utilities.matrix import from_rows
from mfkit.utilities.ring import make_ring


def xy_pair(graded=True):
    ring = make_ring('x,y')
    x, y = ring.gens
    return make_factorization(ring, x * y, from_rows(ring, [[x]]), from_rows(ring, [[y]]), e1=[-1], e0=[0],
                              graded=graded)


def test_validate_pair():
    assert validate_factorization(xy_pair()).valid


def test_validate_reports_wrong_product():
    E = xy_pair()
    y = E.ring.gen('y')
    bad = Factorization(E.ring, E.w, E.e1, E.e0, E.phi0, from_rows(E.ring, [[2 * y]]))
    report = validate_factorization(bad)
    assert not report.valid
    assert any(f.startswith('phi0*phim1') for f in report.failures)
    assert any(f.startswith('phim1*phi0') for f in report.failures)
    with pytest.raises(ValidationError):
        report.raise_if_invalid()


def test_validate_reports_bad_twists():
    E = xy_pair()
    bad = Factorization(E.ring, E.w, (0,), E.e0, E.phi0, E.phim1)
    failures = validate_factorization(bad).failures
    assert any('not homogeneous' in f for f in failures)
    ungraded = Factorization(E.ring, E.w, (0,), E.e0, E.phi0, E.phim1, False)
    assert validate_factorization(ungraded).valid


def test_double_shift_is_twist():
    E = xy_pair()
    assert shift(E, 2) == twist(E, 1)
    assert shift(shift(E, 1), -1) == E
    assert validate_factorization(shift(E, 1)).valid
    assert validate_factorization(shift(E, -3)).valid


def test_twist_needs_graded_mode():
    with pytest.raises(GradingError):
        twist(xy_pair(graded=False), 1)


def test_identity_and_shifted_morphisms():
    E = xy_pair()
    assert validate_morphism(identity_morphism(E)).valid
    assert validate_morphism(shift_morphism(identity_morphism(E), 3)).valid


def test_cone_of_zero_splits():
    E = xy_pair()
    F = shift(E, 1)
    C = cone(zero_morphism(E, F))
    assert C == direct_sum(shift(E, 1), F)


def test_cone_triangle():
    E = xy_pair()
    g = identity_morphism(E)
    C = cone(g)
    assert validate_factorization(C).valid
    i, p = cone_inclusion(g), cone_projection(g)
    assert validate_morphism(i).valid
    assert validate_morphism(p).valid
    composite = compose(p, i)
    assert composite.g0.is_zero()
    assert composite.gm1.is_zero()


def test_cone_rejects_non_morphism():
    E = xy_pair()
    x = E.ring.gen('x')
    g = identity_morphism(E)
    bad = FactMorphism(E, E, g.g0, from_rows(E.ring, [[x]]))
    with pytest.raises(ValidationError):
        cone(bad)


def test_contractible_envelope():
    E = xy_pair()
    G, g = contractible_envelope(E)
    assert validate_factorization(G).valid
    assert validate_morphism(g).valid
    assert G.ranks == (2, 2)


def test_envelope_inclusion_has_full_column_rank():
    ring = make_ring('x,y')
    x, y = ring.gens
    E = make_factorization(ring, x * y, from_rows(ring, [[x, y], [0, y]]), from_rows(ring, [[y, -y], [0, x]]),
                           e1=[-1, -1], e0=[0, 0])
    for F in (xy_pair(), E, shift(E, 1)):
        G, g = contractible_envelope(F)
        assert g.gm1.rank() == len(F.e1)
        assert g.g0.rank() == len(F.e0)


def test_matrix_rank_over_the_fraction_field():
    ring = make_ring('x,y')
    x, y = ring.gens
    assert from_rows(ring, [[x, y], [x * y, y**2]]).rank() == 1
    assert from_rows(ring, [[x, y], [y, x]]).rank() == 2
    assert from_rows(ring, [[0, 0]]).rank() == 0


def test_direct_sum_checks_potential():
    E = xy_pair()
    x = E.ring.gen('x')
    other = make_factorization(E.ring, x**2, from_rows(E.ring, [[x]]), from_rows(E.ring, [[x]]), e1=[-1], e0=[0])
    with pytest.raises(RingMismatchError):
        direct_sum(E, other)


def test_base_change_to_diagonal():
    E = xy_pair()
    target = make_ring('t')
    t = target.gens[0]
    F = base_change(E, target, [t, t], t**2)
    assert F.phi0 == from_rows(target, [[t]])
    assert F.phim1 == from_rows(target, [[t]])
    assert validate_factorization(F).valid
    assert validate_morphism(base_change_morphism(identity_morphism(E), target, [t, t], t**2)).valid


def test_base_change_checks_potential_and_weights():
    E = xy_pair()
    target = make_ring('t')
    t = target.gens[0]
    with pytest.raises(RingMismatchError):
        base_change(E, target, [t, t], t**3)
    with pytest.raises(GradingError):
        base_change(E, target, [t**2, t], t**3)
    assert base_change(E, target, [t**2, t], t**3, graded=False).graded is False
