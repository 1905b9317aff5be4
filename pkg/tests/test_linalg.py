from sympy.polys.domains import FF, QQ

from mfkit.utilities.linalg import exact_solve, extend_basis, nullspace, rank, rref


def q(rows):
    return [[QQ(v) for v in row] for row in rows]


def test_rref_of_empty_matrix():
    assert rref([], 3, QQ) == ([], ())


def test_exact_solve_unique():
    solution = exact_solve(q([[1, 1], [1, -1]]), [QQ(2), QQ(0)], QQ)
    assert solution.consistent
    assert solution.particular == (QQ(1), QQ(1))
    assert solution.nullspace_basis == ()


def test_exact_solve_inconsistent():
    solution = exact_solve(q([[1, 1], [1, 1]]), [QQ(1), QQ(2)], QQ)
    assert not solution.consistent


def test_exact_solve_without_unknowns():
    assert exact_solve([[], []], [QQ(0), QQ(0)], QQ, ncols=0).consistent
    assert not exact_solve([[], []], [QQ(0), QQ(1)], QQ, ncols=0).consistent


def test_nullspace():
    assert nullspace(q([[1, 2], [2, 4]]), 2, QQ) == [(QQ(-2), QQ(1))]
    assert nullspace(q([[1, 0], [0, 1]]), 2, QQ) == []
    assert nullspace([], 2, QQ) == [(QQ(1), QQ(0)), (QQ(0), QQ(1))]


def test_rank_over_prime_field():
    K = FF(5)
    rows = [[K(1), K(2)], [K(3), K(1)]]
    assert rank(rows, 2, K) == 1
    assert rank(q([[1, 2], [3, 1]]), 2, QQ) == 2


def test_extend_basis_modulo_span():
    spanning = [(QQ(1), QQ(0), QQ(0))]
    candidates = [(QQ(2), QQ(0), QQ(0)), (QQ(0), QQ(1), QQ(0)), (QQ(1), QQ(1), QQ(0))]
    assert extend_basis(spanning, candidates, 3, QQ) == [1]
