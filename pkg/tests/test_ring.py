import pytest
from sympy.polys.domains import QQ

from mfkit.utilities.errors import MfkitError, RingMismatchError
from mfkit.utilities.ring import (
    FieldSpec, coeff_from_string, coeff_to_string, format_poly, graded_piece_basis, homogeneous_degree, make_ring,
    monomial, monomials_of_degree, monomials_up_to, parse_poly, poly_mul, substitute,
)


def test_make_ring_defaults():
    ring = make_ring('x, y')
    assert ring.vars == ('x', 'y')
    assert ring.weights == (1, 1)
    assert ring.field == FieldSpec()
    assert make_ring(['x', 'y']) == ring


def test_field_spec_rejects_composite_modulus():
    with pytest.raises(MfkitError):
        FieldSpec('Fp', 4)
    with pytest.raises(MfkitError):
        FieldSpec('Q', 5)


def test_parse_and_format():
    ring = make_ring('x,y')
    x, y = ring.gens
    p = parse_poly(ring, 'x^2 - 3/2*y')
    assert p == x**2 - y * QQ(3, 2)
    assert parse_poly(ring, format_poly(p)) == p


def test_parse_rejects_unknown_symbol():
    ring = make_ring('x')
    with pytest.raises(MfkitError):
        parse_poly(ring, 'x + z')


def test_homogeneous_degree_with_weights():
    ring = make_ring('x,y', [1, 2])
    x, y = ring.gens
    assert homogeneous_degree(ring, x**2 + y) == (2, False)
    assert homogeneous_degree(ring, x + y) == (None, False)
    assert homogeneous_degree(ring, ring.zero) == (None, True)


def test_monomials_of_degree():
    ring = make_ring('x,y', [1, 2])
    assert monomials_of_degree(ring, 2) == [(2, 0), (0, 1)]
    assert monomials_of_degree(ring, -1) == []
    assert len(monomials_up_to(make_ring('x,y'), 2)) == 6


def test_coefficients_are_reduced():
    ring = make_ring('x')
    assert coeff_to_string(ring, coeff_from_string(ring, '2/4')) == '1/2'
    assert coeff_to_string(ring, coeff_from_string(ring, '-6/3')) == '-2'


def test_prime_field_residues():
    ring = make_ring('x', field=5)
    assert coeff_to_string(ring, coeff_from_string(ring, '-2')) == '3'
    assert coeff_to_string(ring, coeff_from_string(ring, '1/2')) == '3'
    with pytest.raises(MfkitError):
        coeff_from_string(ring, '1/5')


def test_substitute_collapses_variables():
    source = make_ring('x,y')
    target = make_ring('t')
    t = target.gens[0]
    x, y = source.gens
    assert substitute(source, target, x * y + 2 * x, [t, t]) == t**2 + 2 * t


def test_substitute_reduces_modulo_p():
    source = make_ring('x')
    target = make_ring('x', field=5)
    x = source.gens[0]
    assert substitute(source, target, 7 * x**2, list(target.gens)) == monomial(target, [2], 2)


def test_substitute_checks_rings():
    source = make_ring('x')
    target = make_ring('t')
    with pytest.raises(RingMismatchError):
        substitute(source, target, source.gens[0], [source.gens[0]])


def test_poly_mul_checks_rings():
    ring = make_ring('x,y')
    x, y = ring.gens
    assert poly_mul(x + y, x - y) == x**2 - y**2
    with pytest.raises(RingMismatchError):
        poly_mul(x, make_ring('t').gens[0])


def test_graded_piece_basis():
    ring = make_ring('x,y')
    assert graded_piece_basis(ring, [0, 1], 1) == [(0, (1, 0)), (0, (0, 1)), (1, (2, 0)), (1, (1, 1)), (1, (0, 2))]
    assert graded_piece_basis(ring, [-2], 1) == []
