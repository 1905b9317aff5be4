"""Koszul complexes of variable sequences and their contracting homotopies."""

import itertools
from dataclasses import dataclass

from mfkit.algorithms.complex import FreeComplex, make_complex
from mfkit.algorithms.factorization import Report, compare_matrices
from mfkit.utilities.errors import MfkitError, SplittingError
from mfkit.utilities.matrix import PolyMatrix, scalar, zeros
from mfkit.utilities.ring import check_same_ring, format_poly, monomial


@dataclass(frozen=True)
class KoszulData:
    """
    Koszul complex of (x_1..x_n) together with the homotopy built from a splitting of w.

    Args:
        sequence: `tuple` of `str` - Variable names x_1..x_n.
        splitting: `tuple` of `PolyElement` - w_1..w_n with w = sum w_i x_i.
        w: `PolyElement` - Potential.
        complex: `FreeComplex` - Koszul complex, Lambda^k sits at index -k.
        homotopies: `dict` - Index -k -> map Lambda^k -> Lambda^(k+1).
    """

    sequence: tuple
    splitting: tuple
    w: object
    complex: FreeComplex
    homotopies: dict


def exterior_basis(n, k):
    """Subsets of size k of range(n) in lexicographic order."""
    return list(itertools.combinations(range(n), k))


def _sequence_positions(ring, sequence):
    if len(set(sequence)) != len(sequence):
        raise MfkitError('repeated variable in sequence {0}'.format(list(sequence)))
    for name in sequence:
        if name not in ring.vars:
            raise MfkitError('{0} is not a variable of {1}'.format(name, ring))
    return [ring.vars.index(name) for name in sequence]


def koszul_complex(
        ring,
        sequence
    ):
    """
    The Koszul complex of a sequence of distinct variables.

    Args:
        ring: `GradedRing` - Base ring.
        sequence: `list` of `str` - Variables x_1..x_n.

    Notes:

    * Lambda^k sits at index -k with basis e_S, |S| = k, in lexicographic subset order.
    * The generator e_S spans R(-deg S) where deg S is the sum of the weights in S.
    * The differential contracts: e_S -> sum over i in S of (-1)^(position of i in S) x_i e_(S - i).
    """

    positions = _sequence_positions(ring, sequence)
    n = len(sequence)
    gens = [ring.gens[p] for p in positions]
    weights = [ring.weights[p] for p in positions]

    bases = [exterior_basis(n, k) for k in range(n + 1)]
    modules = {-k: tuple(-sum(weights[i] for i in S) for S in bases[k]) for k in range(n + 1)}

    diffs = {}
    for k in range(1, n + 1):
        target_index = {S: r for r, S in enumerate(bases[k - 1])}
        grid = [[ring.zero for _ in bases[k]] for _ in bases[k - 1]]
        for c, S in enumerate(bases[k]):
            for pos, i in enumerate(S):
                rest = S[:pos] + S[pos + 1:]
                sign = -1 if pos % 2 else 1
                grid[target_index[rest]][c] = grid[target_index[rest]][c] + gens[i] * sign
        diffs[-k + 1] = PolyMatrix(ring, len(bases[k - 1]), len(bases[k]), tuple(tuple(r) for r in grid))

    return make_complex(ring, modules, diffs)


def split_w(
        ring,
        w,
        sequence
    ):
    """
    Writes w = sum w_i x_i by greedy division.

    Args:
        ring: `GradedRing` - Base ring.
        w: `PolyElement` - Potential.
        sequence: `list` of `str` - Variables x_1..x_n.

    Notes:

    * Each term of w, in graded lexicographic order, goes to the first variable of the sequence dividing it.
    """

    check_same_ring(ring, w)
    positions = _sequence_positions(ring, sequence)
    parts = [ring.zero for _ in sequence]
    for monom, coeff in w.terms():
        for slot, p in enumerate(positions):
            if monom[p] > 0:
                quotient = list(monom)
                quotient[p] -= 1
                parts[slot] = parts[slot] + monomial(ring, quotient, coeff)
                break
        else:
            raise SplittingError('{0} is not in the ideal generated by {1}'.format(format_poly(w), list(sequence)))
    return tuple(parts)


def koszul_homotopy(
        ring,
        K,
        sequence,
        w,
        splitting
    ):
    """
    Wedging with sum w_i e_i, a homotopy h with dh + hd = w and h^2 = 0.

    Args:
        ring: `GradedRing` - Base ring.
        K: `FreeComplex` - Koszul complex of `sequence`.
        sequence: `list` of `str` - Variables x_1..x_n.
        w: `PolyElement` - Potential.
        splitting: `list` of `PolyElement` - w_1..w_n.

    Notes:

    * e_i wedge e_S = (-1)^(number of j in S below i) e_(S + i).
    * Both identities are verified before returning.
    """

    positions = _sequence_positions(ring, sequence)
    n = len(sequence)
    splitting = tuple(ring.poly_ring(s) for s in splitting)
    if len(splitting) != n:
        raise SplittingError('{0} splitting terms for {1} variables'.format(len(splitting), n))

    # The splitting must sum to w
    total = ring.zero
    for part, p in zip(splitting, positions):
        total = total + part * ring.gens[p]
    if total != w:
        raise SplittingError('splitting sums to {0}, not {1}'.format(format_poly(total), format_poly(w)))

    # Wedge with sum w_i e_i
    bases = [exterior_basis(n, k) for k in range(n + 1)]
    homotopies = {}
    for k in range(n):
        target_index = {S: r for r, S in enumerate(bases[k + 1])}
        grid = [[ring.zero for _ in bases[k]] for _ in bases[k + 1]]
        for c, S in enumerate(bases[k]):
            for i in range(n):
                if i in S or not splitting[i]:
                    continue
                below = sum(1 for j in S if j < i)
                sign = -1 if below % 2 else 1
                union = tuple(sorted(S + (i,)))
                grid[target_index[union]][c] = grid[target_index[union]][c] + splitting[i] * sign
        homotopies[-k] = PolyMatrix(ring, len(bases[k + 1]), len(bases[k]), tuple(tuple(r) for r in grid))

    data = KoszulData(tuple(sequence), splitting, w, K, homotopies)
    check_koszul(data).raise_if_invalid()
    return data


def koszul_data(
        ring,
        sequence,
        w,
        splitting=None
    ):
    """Koszul complex plus homotopy, splitting w greedily when no splitting is given."""
    if splitting is None:
        splitting = split_w(ring, w, sequence)
    K = koszul_complex(ring, sequence)
    return koszul_homotopy(ring, K, sequence, w, splitting)


def homotopy_at(data, index):
    """h out of the module at `index`, zero outside the complex."""
    K = data.complex
    if index in data.homotopies:
        return data.homotopies[index]
    return zeros(K.ring, K.rank(index - 1), K.rank(index))


def check_koszul(data):
    """
    Verifies d^2 = 0, dh + hd = w and h^2 = 0 on every exterior power.

    Args:
        data: `KoszulData` - Complex and homotopy to check.
    """

    K = data.complex
    ring = K.ring
    report = Report('koszul')
    for i in range(K.lo, K.hi + 1):
        rank = K.rank(i)

        # d^2 = 0
        dd = K.diff(i + 1) @ K.diff(i)
        compare_matrices(report, 'd^2 at {0}'.format(i), dd, zeros(ring, *dd.shape))

        # Cartan identity, d goes up one index and h goes down one
        cartan = K.diff(i) @ homotopy_at(data, i) + homotopy_at(data, i + 1) @ K.diff(i + 1)
        compare_matrices(report, 'dh+hd at {0}'.format(i), cartan, scalar(ring, rank, data.w))

        # h^2 = 0
        hh = homotopy_at(data, i - 1) @ homotopy_at(data, i)
        compare_matrices(report, 'h^2 at {0}'.format(i), hh, zeros(ring, *hh.shape))
    return report
