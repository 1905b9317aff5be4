import pytest

from mfkit.algorithms.complex import zero_complex
from mfkit.algorithms.corpus import mf_pair
from mfkit.algorithms.factorization import make_factorization, zero_factorization
from mfkit.algorithms.koszul import koszul_complex
from mfkit.algorithms.spectral import (
    DERIVED, PRINTED, direct_hom_dims, e1_page, ext_koszul, free_resolutions, ss_degeneration_check,
    variant_discrepancies,
)
from mfkit.utilities.errors import GradingError, MfkitError
from mfkit.utilities.matrix import from_rows
from mfkit.utilities.ring import make_ring


def x_squared(graded=True):
    ring = make_ring('x')
    x = ring.gens[0]
    return make_factorization(ring, x**2, from_rows(ring, [[x]]), from_rows(ring, [[x]]), e1=[-1], e0=[0],
                              graded=graded)


def residue_resolutions(ring):
    return zero_complex(ring), koszul_complex(ring, ['x'])


def test_ext_of_residue_field_in_one_variable():
    ring = make_ring('x')
    assert ext_koszul(ring, ['x'], [0], -1) == [0, 1]
    assert ext_koszul(ring, ['x'], [0], 0) == [0, 0]
    assert ext_koszul(ring, ['x'], [0], -2) == [0, 0]
    assert ext_koszul(ring, ['x'], [3], -4) == [0, 1]


def test_ext_of_residue_field_in_two_variables():
    ring = make_ring('x,y')
    assert ext_koszul(ring, ['x', 'y'], [0], -2) == [0, 0, 1]
    assert ext_koszul(ring, ['x', 'y'], [0], -1) == [0, 0, 0]


def test_ext_against_a_sum():
    ring = make_ring('x,y')
    assert ext_koszul(ring, ['x', 'y'], [0, 0, 1], -2) == [0, 0, 2]


def test_e1_page_for_x_squared():
    F = x_squared()
    table = e1_page(residue_resolutions(F.ring), F, 0)
    assert table.entries == {(1, -1): 1}
    assert table.totals == {-1: 0, 0: 1, 1: 0, 2: 0}
    direct = direct_hom_dims(F, F, table.total_degrees, 0)
    assert direct == {-1: 0, 0: 1, 1: 0, 2: 0}
    assert ss_degeneration_check(table, direct).degenerates


def test_e1_page_of_zero_target_is_empty():
    ring = make_ring('x')
    F = zero_factorization(ring, ring.gens[0]**2)
    assert e1_page(residue_resolutions(ring), F, 0).entries == {}


def test_free_source_bounds_hom():
    F, G = mf_pair(1, 3), mf_pair(2, 3)
    for t in (-1, 0, 1):
        table = e1_page(free_resolutions(F), G, t, [0, 1])
        degeneration = ss_degeneration_check(table, direct_hom_dims(F, G, [0, 1], t))
        assert degeneration.report.valid


def test_printed_variant():
    F = x_squared()
    table = e1_page(residue_resolutions(F.ring), F, 0, variant=PRINTED)
    assert table.variant == PRINTED
    assert table.entries == {(-1, 2): 1}
    assert table.totals == {-1: 0, 0: 0, 1: 1, 2: 0}
    assert min(p for p, _ in table.twists) == -4
    verdict = ss_degeneration_check(table, direct_hom_dims(F, F, table.total_degrees, 0))
    assert verdict.report.failures == ['total degree 0: E_1 sum 0 < dim Hom 1']


def test_variant_discrepancies():
    F = x_squared()
    resolutions = residue_resolutions(F.ring)
    printed = variant_discrepancies(resolutions, F, F, [0], range(-1, 3))
    assert printed == ['internal degree 0, total degree 0: E_1 sum 0 < dim Hom 1']
    assert variant_discrepancies(resolutions, F, F, range(-2, 3), range(-1, 3), DERIVED) == []


def test_e1_page_rejects_bad_input():
    ring = make_ring('x')
    with pytest.raises(GradingError):
        e1_page(residue_resolutions(ring), x_squared(graded=False), 0)
    with pytest.raises(MfkitError):
        e1_page(residue_resolutions(ring), x_squared(), 0, variant='other')


def test_degeneration_check_needs_every_total_degree():
    F = x_squared()
    table = e1_page(residue_resolutions(F.ring), F, 0, [0, 1])
    with pytest.raises(MfkitError):
        ss_degeneration_check(table, {0: 1})
