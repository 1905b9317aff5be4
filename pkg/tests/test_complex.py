import pytest

from mfkit.algorithms.complex import (
    check_exact, cone_complex, homology_dims, make_complex, shift_complex, validate_complex,
)
from mfkit.algorithms.koszul import koszul_complex
from mfkit.utilities.errors import GradingError
from mfkit.utilities.matrix import from_rows, identity
from mfkit.utilities.ring import make_ring


def test_homology_of_koszul_complex():
    ring = make_ring('x')
    K = koszul_complex(ring, ['x'])
    assert homology_dims(K, 0) == {-1: 0, 0: 1}
    assert homology_dims(K, 1) == {-1: 0, 0: 0}
    assert not check_exact(K, range(0, 2)).valid
    assert check_exact(K, range(1, 4)).valid


def test_homology_of_koszul_complex_of_two_variables():
    ring = make_ring('x,y')
    K = koszul_complex(ring, ['x', 'y'])
    assert homology_dims(K, 0) == {-2: 0, -1: 0, 0: 1}
    assert check_exact(K, range(1, 4)).valid
    report = check_exact(K, range(0, 1))
    assert report.failures == ['H_0 has dimension 1 in degree 0']


def test_shift_complex():
    ring = make_ring('x,y')
    x, y = ring.gens
    K = koszul_complex(ring, ['x', 'y'])
    S = shift_complex(K)
    assert S.modules == {-1: (0,), -2: (-1, -1), -3: (-2,)}
    assert S.diff(-1) == from_rows(ring, [[-x, -y]])
    assert validate_complex(S).valid
    assert shift_complex(K, 2).diff(-2) == K.diff(0)
    assert shift_complex(S, -1) == K


def test_cone_of_identity_is_exact():
    ring = make_ring('x,y')
    K = koszul_complex(ring, ['x', 'y'])
    C = cone_complex(K, K, {i: identity(ring, K.rank(i)) for i in K.indices})
    assert C.modules[-1] == (0, -1, -1)
    assert validate_complex(C).valid
    assert check_exact(C, range(0, 4)).valid


def test_cone_of_zero_keeps_the_homology():
    ring = make_ring('x')
    K = koszul_complex(ring, ['x'])
    C = cone_complex(K, K, {})
    assert validate_complex(C).valid
    assert homology_dims(C, 0) == {-2: 0, -1: 1, 0: 1}


def test_homology_needs_homogeneous_differentials():
    ring = make_ring('x')
    x = ring.gens[0]
    A = make_complex(ring, {0: (0,), -1: (0,)}, {0: from_rows(ring, [[x]])})
    with pytest.raises(GradingError):
        homology_dims(A, 0)
