import pytest

from mfkit.algorithms.complex import validate_complex
from mfkit.algorithms.koszul import check_koszul, koszul_complex, koszul_data, koszul_homotopy, split_w
from mfkit.utilities.errors import MfkitError, SplittingError
from mfkit.utilities.matrix import from_rows
from mfkit.utilities.ring import make_ring


def test_koszul_complex_of_two_variables():
    ring = make_ring('x,y')
    x, y = ring.gens
    K = koszul_complex(ring, ['x', 'y'])
    assert K.modules == {0: (0,), -1: (-1, -1), -2: (-2,)}
    assert K.diff(0) == from_rows(ring, [[x, y]])
    assert K.diff(-1) == from_rows(ring, [[-y], [x]])
    assert validate_complex(K).valid


def test_koszul_twists_follow_weights():
    ring = make_ring('x,y', [2, 3])
    K = koszul_complex(ring, ['y', 'x'])
    assert K.modules[-1] == (-3, -2)
    assert K.modules[-2] == (-5,)
    assert validate_complex(K).valid


def test_koszul_rejects_bad_sequences():
    ring = make_ring('x,y')
    with pytest.raises(MfkitError):
        koszul_complex(ring, ['x', 'x'])
    with pytest.raises(MfkitError):
        koszul_complex(ring, ['z'])


def test_greedy_split():
    ring = make_ring('x,y,z')
    x, y, z = ring.gens
    assert split_w(ring, x * y, ['x', 'y']) == (y, ring.zero)
    assert split_w(ring, x * y + y**2, ['x', 'y']) == (y, y)
    with pytest.raises(SplittingError):
        split_w(ring, z, ['x', 'y'])


def test_homotopy_identities():
    ring = make_ring('x,y,z')
    x, y, z = ring.gens
    data = koszul_data(ring, ['x', 'y', 'z'], x**3 + y**3 + z**3)
    assert check_koszul(data).valid
    assert set(data.homotopies) == {0, -1, -2}


def test_homotopy_of_xy():
    ring = make_ring('x,y')
    x, y = ring.gens
    data = koszul_data(ring, ['x', 'y'], x * y)
    assert data.homotopies[0] == from_rows(ring, [[y], [0]])
    assert data.homotopies[-1] == from_rows(ring, [[0, y]])


def test_explicit_splitting_must_sum_to_w():
    ring = make_ring('x,y')
    x, y = ring.gens
    K = koszul_complex(ring, ['x', 'y'])
    assert check_koszul(koszul_homotopy(ring, K, ['x', 'y'], x * y, [ring.zero, x])).valid
    with pytest.raises(SplittingError):
        koszul_homotopy(ring, K, ['x', 'y'], x * y, [y, x])
