import pytest

from mfkit.algorithms.complex import check_exact, cone_complex, negate, shift_complex, zero_complex
from mfkit.algorithms.corpus import id_chain, mf_pair, split_ses
from mfkit.algorithms.factorization import cone, identity_morphism, shift, validate_factorization, zero_morphism
from mfkit.algorithms.fold import (
    FoldBlocks, fold, fold_cone, fold_report, shift_fold, stabilize, stabilize_data, totalize, unfold,
)
from mfkit.algorithms.koszul import koszul_complex, koszul_data
from mfkit.utilities.errors import SplittingError, ValidationError
from mfkit.utilities.matrix import from_rows, identity
from mfkit.utilities.ring import make_ring


def lower(blocks):
    return FoldBlocks({k: b for k, b in blocks.blocks_m1.items() if k[1] <= k[0]},
                      {k: b for k, b in blocks.blocks_0.items() if k[1] <= k[0]})


def test_stabilize_one_variable():
    ring = make_ring('x')
    x = ring.gens[0]
    E = stabilize(ring, ['x'], x**2)
    assert E.e1 == (-1,)
    assert E.e0 == (0,)
    assert E.phi0 == from_rows(ring, [[x]])
    assert E.phim1 == from_rows(ring, [[x]])


def test_stabilize_xy():
    ring = make_ring('x,y')
    x, y = ring.gens
    E = stabilize(ring, ['x', 'y'], x * y)
    assert E.e1 == (-1, -1)
    assert E.e0 == (0, 0)
    assert E.phi0 == from_rows(ring, [[x, y], [0, y]])
    assert E.phim1 == from_rows(ring, [[y, -y], [0, x]])
    assert validate_factorization(E).valid


def test_stabilize_three_variables():
    ring = make_ring('x,y,z')
    x, y, z = ring.gens
    E = stabilize(ring, ['x', 'y', 'z'], x**2 + y**2 + z**2)
    assert E.ranks == (4, 4)
    assert validate_factorization(E).valid


def test_stabilize_needs_w_in_ideal():
    ring = make_ring('x,y,z')
    with pytest.raises(SplittingError):
        stabilize(ring, ['x', 'y'], ring.gen('z'))


def test_stabilize_ungraded():
    ring = make_ring('x,y')
    x, y = ring.gens
    E = stabilize(ring, ['x', 'y'], x**2 + y**3, graded=False)
    assert not E.graded
    assert validate_factorization(E).valid


def test_fold_rejects_wrong_blocks():
    ring = make_ring('x')
    x = ring.gens[0]
    data = koszul_data(ring, ['x'], x**2)
    blocks = FoldBlocks({(0, -1): data.homotopies[0].scale(2)}, {})
    with pytest.raises(ValidationError):
        fold(zero_complex(ring), negate(data.complex), blocks, x**2)


def test_fold_rejects_blocks_far_above_diagonal():
    ring = make_ring('x,y')
    x, y = ring.gens
    data = koszul_data(ring, ['x', 'y'], x * y)
    blocks = FoldBlocks({(0, -1): data.homotopies[0], (-2, 0): from_rows(ring, [[1]])},
                        {(-1, -2): data.homotopies[-1]})
    with pytest.raises(ValidationError) as error:
        fold(zero_complex(ring), negate(data.complex), blocks, x * y)
    assert any('(-2,0)' in f for f in error.value.failures)


def test_fold_of_zero_potential():
    ring = make_ring('x')
    x = ring.gens[0]
    E = fold(zero_complex(ring), negate(koszul_complex(ring, ['x'])), FoldBlocks(), ring.zero)
    assert E.e1 == (-1,)
    assert E.e0 == (0,)
    assert E.phi0 == from_rows(ring, [[x]])
    assert E.phim1 == from_rows(ring, [[0]])


def test_unfold_recovers_the_complexes():
    ring = make_ring('x,y')
    x, y = ring.gens
    E, full, data = stabilize_data(ring, ['x', 'y'], x * y)
    blocks = unfold(E, full.layout_m1, full.layout_0)
    assert blocks.c_0 == negate(data.complex)
    assert blocks.c_m1 == zero_complex(ring)
    assert fold(blocks.c_m1, blocks.c_0, lower(blocks), E.w) == E


def test_unfold_rejects_foreign_layout():
    ring = make_ring('x,y')
    x, y = ring.gens
    E = stabilize(ring, ['x', 'y'], x * y)
    with pytest.raises(ValidationError):
        unfold(E, {0: (0, 1)}, {-2: (0, 1)})


def test_shift_fold():
    ring = make_ring('x,y')
    x, y = ring.gens
    E, full, _ = stabilize_data(ring, ['x', 'y'], x * y)
    assert len([i for i in full.c_0.indices if not full.c_0.diff(i).is_zero()]) == 2
    shifted = shift_fold(full)
    assert shifted.c_m1 == shift_complex(full.c_m1)
    assert shifted.c_0 == shift_complex(full.c_0)
    assert shifted.layout_m1 == {p - 1: positions for p, positions in full.layout_0.items()}
    assert fold(shifted.c_m1, shifted.c_0, lower(shifted), E.w) == shift(E, 1)


def test_shift_fold_twice():
    ring = make_ring('x')
    E, full, _ = stabilize_data(ring, ['x'], ring.gens[0]**2)
    twice = shift_fold(shift_fold(full))
    assert twice.c_0 == shift_complex(full.c_0, 2)
    assert fold(twice.c_m1, twice.c_0, lower(twice), E.w) == shift(E, 2)


def test_fold_cone_of_identity():
    ring = make_ring('x')
    x = ring.gens[0]
    E, full, _ = stabilize_data(ring, ['x'], x**2)
    g = identity_morphism(E)
    C, blocks = fold_cone(g, full, full)
    assert C == cone(g)
    assert blocks.layout_m1 == {0: (), -1: (0, 1), -2: ()}
    assert blocks.layout_0 == {0: (1,), -1: (), -2: (0,)}
    assert blocks.c_m1 == zero_complex(ring)
    assert blocks.c_0.diff(0) == from_rows(ring, [[-1, -x]])
    assert blocks.c_0.diff(-1) == from_rows(ring, [[x], [-1]])
    assert check_exact(blocks.c_0, range(0, 3)).valid
    assert fold_report(C, blocks).valid


def test_fold_cone_recovers_cone_complexes():
    ring = make_ring('x,y')
    x, y = ring.gens
    E, full, _ = stabilize_data(ring, ['x', 'y'], x * y)
    C, blocks = fold_cone(identity_morphism(E), full, full)
    minus_identities = {p: -identity(ring, full.c_0.rank(p)) for p in full.c_0.indices}
    assert blocks.c_0 == cone_complex(full.c_0, full.c_0, minus_identities)
    assert check_exact(blocks.c_0, range(0, 4)).valid
    assert fold_report(C, blocks).valid


def test_fold_cone_of_zero_is_not_exact():
    ring = make_ring('x')
    E, full, _ = stabilize_data(ring, ['x'], ring.gens[0]**2)
    C, blocks = fold_cone(zero_morphism(E, E), full, full)
    assert fold_report(C, blocks).valid
    assert not check_exact(blocks.c_0, range(0, 3)).valid


def test_totalize_identity_chain():
    E = mf_pair(1, 3)
    T = totalize(*id_chain(E))
    assert T.ranks == (2, 2)
    assert validate_factorization(T).valid


def test_totalize_split_sequence_and_start():
    E = mf_pair(2, 3)
    objects, maps = split_ses(E)
    assert validate_factorization(totalize(objects, maps)).valid
    assert validate_factorization(totalize(objects, maps, start=1)).valid
    assert totalize([E], []) == E


def test_totalize_rejects_nonzero_composite():
    E = mf_pair(1, 3)
    g = identity_morphism(E)
    with pytest.raises(ValidationError):
        totalize([E, E, E], [g, g])
    with pytest.raises(ValidationError):
        totalize([E, E], [])
