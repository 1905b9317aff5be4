"""Foldings of complex pairs into factorizations, totalizations and stabilization."""

from dataclasses import dataclass, field

from mfkit.algorithms.complex import (
    FreeComplex, check_chain_map, cone_complex, make_complex, negate, shift_complex, validate_complex, zero_complex,
)
from mfkit.algorithms.factorization import (
    Factorization, Report, compare_matrices, compose, cone, shift, validate_factorization, validate_morphism,
)
from mfkit.algorithms.koszul import homotopy_at, koszul_data
from mfkit.utilities.errors import GradingError, RingMismatchError, ValidationError
from mfkit.utilities.matrix import block, scalar, zeros
from mfkit.utilities.ring import format_poly, homogeneous_degree


@dataclass
class FoldBlocks:
    """
    The block family of a folding.

    Args:
        blocks_m1: `dict` - (p, q) -> component of phi^-1 from summand p of Phi^-1(T^0) to summand q of T^-1.
        blocks_0: `dict` - (p, q) -> component of phi^0 from summand p of T^-1 to summand q of T^0.
        c_m1: `FreeComplex` - Complex folded into the odd-even pattern starting at T^-1.
        c_0: `FreeComplex` - Complex folded into the pattern starting at T^0.
        layout_m1: `dict` - p -> positions of summand p inside T^-1.
        layout_0: `dict` - p -> positions of summand p inside T^0.

    Notes:

    * Only the blocks with q <= p are needed as input, the superdiagonal ones come from the differentials.
    * Missing blocks are zero.
    """

    blocks_m1: dict = field(default_factory=dict)
    blocks_0: dict = field(default_factory=dict)
    c_m1: FreeComplex = None
    c_0: FreeComplex = None
    layout_m1: dict = field(default_factory=dict)
    layout_0: dict = field(default_factory=dict)


def potential_degree(ring, w, graded):
    if not graded:
        return 0
    d, is_zero = homogeneous_degree(ring, w)
    if is_zero:
        return 0
    if d is None:
        raise GradingError('potential {0} is not homogeneous'.format(format_poly(w)))
    return d


def summand_twists(c_m1, c_0, p, d):
    """
    Twists of the p-th summands of T^-1 and T^0.

    Notes:

    * T^-1_p is Phi^-l(A^-1_p) for p = 2l and Phi^(-l-1)(A^0_p) for p = 2l+1.
    * T^0_p is Phi^-l(A^0_p) for p = 2l and Phi^-l(A^-1_p) for p = 2l+1.
    """

    l = p // 2
    if p % 2 == 0:
        return (tuple(a - l * d for a in c_m1.module(p)),
                tuple(a - l * d for a in c_0.module(p)))
    return (tuple(a - (l + 1) * d for a in c_0.module(p)),
            tuple(a - l * d for a in c_m1.module(p)))


def superdiagonal(c_m1, c_0, p):
    """
    The forced blocks (phi^-1_{p,p+1}, phi^0_{p,p+1}).

    Notes:

    * p odd: d^-1_{p+1} and -d^0_{p+1}.
    * p even: -d^0_{p+1} and d^-1_{p+1}.
    """

    if p % 2:
        return c_m1.diff(p + 1), -c_0.diff(p + 1)
    return -c_0.diff(p + 1), c_m1.diff(p + 1)


def fold_indices(c_m1, c_0):
    """Summand indices in descending order, so the resolution degree ascends."""
    lo = min(c_m1.lo, c_0.lo)
    hi = max(c_m1.hi, c_0.hi)
    return list(range(hi, lo - 1, -1))


def check_fold_identities(
        ring,
        w,
        indices,
        blocks,
        sizes_m1,
        sizes_0
    ):
    """
    Checks sum_t phi^0_{t,q} phi^-1_{p,t} = w delta_pq and sum_t phi^-1_{t,q} phi^0_{p,t} = w delta_pq.

    Args:
        ring: `GradedRing` - Base ring.
        w: `PolyElement` - Potential.
        indices: `list` of `int` - Summand indices.
        blocks: `FoldBlocks` - Complete block family.
        sizes_m1: `dict` - p -> rank of T^-1_p.
        sizes_0: `dict` - p -> rank of T^0_p.
    """

    report = Report('fold identities')

    def get(family, p, q, rows, cols):
        return family.get((p, q)) or zeros(ring, rows, cols)

    for p in indices:
        for q in indices:
            # Through T^-1: Phi^-1(T^0)_p -> T^-1_t -> T^0_q
            total = zeros(ring, sizes_0[q], sizes_0[p])
            for t in indices:
                total = total + get(blocks.blocks_0, t, q, sizes_0[q], sizes_m1[t]) @ \
                    get(blocks.blocks_m1, p, t, sizes_m1[t], sizes_0[p])
            expected = scalar(ring, sizes_0[p], w) if p == q else zeros(ring, sizes_0[q], sizes_0[p])
            compare_matrices(report, 'phi0*phim1 ({0},{1})'.format(p, q), total, expected)

            # Through T^0: T^-1_p -> T^0_t -> T^-1_q
            total = zeros(ring, sizes_m1[q], sizes_m1[p])
            for t in indices:
                total = total + get(blocks.blocks_m1, t, q, sizes_m1[q], sizes_0[t]) @ \
                    get(blocks.blocks_0, p, t, sizes_0[t], sizes_m1[p])
            expected = scalar(ring, sizes_m1[p], w) if p == q else zeros(ring, sizes_m1[q], sizes_m1[p])
            compare_matrices(report, 'phim1*phi0 ({0},{1})'.format(p, q), total, expected)
    return report


def fold_report(E, blocks):
    """Checks the block identities of E read along the layouts of `blocks`."""
    indices = sorted(set(blocks.layout_m1) | set(blocks.layout_0), reverse=True)
    sizes_m1 = {p: len(blocks.layout_m1.get(p, ())) for p in indices}
    sizes_0 = {p: len(blocks.layout_0.get(p, ())) for p in indices}
    return check_fold_identities(E.ring, E.w, indices, blocks, sizes_m1, sizes_0)


def fold_data(
        c_m1,
        c_0,
        blocks,
        w,
        graded=True
    ):
    """
    Folds a pair of bounded complexes into a factorization.

    Args:
        c_m1: `FreeComplex` - Complex A^-1.
        c_0: `FreeComplex` - Complex A^0.
        blocks: `FoldBlocks` - Blocks with q <= p, superdiagonal blocks may be omitted.
        w: `PolyElement` - Potential.
        graded: `bool` - Graded mode flag.

    Notes:

    * Returns the folded factorization and the completed `FoldBlocks`.
    * Raises `ValidationError` listing the offending (p, q) when a block identity fails.
    """

    ring = c_0.ring
    if c_m1.ring != ring:
        raise RingMismatchError('complexes over different rings')
    d = potential_degree(ring, w, graded)
    indices = fold_indices(c_m1, c_0)

    # Summand twists and layouts
    twists_m1, twists_0 = {}, {}
    for p in indices:
        twists_m1[p], twists_0[p] = summand_twists(c_m1, c_0, p, d)
    sizes_m1 = {p: len(twists_m1[p]) for p in indices}
    sizes_0 = {p: len(twists_0[p]) for p in indices}
    layout_m1, layout_0 = {}, {}
    offset_m1 = offset_0 = 0
    for p in indices:
        layout_m1[p] = tuple(range(offset_m1, offset_m1 + sizes_m1[p]))
        layout_0[p] = tuple(range(offset_0, offset_0 + sizes_0[p]))
        offset_m1 += sizes_m1[p]
        offset_0 += sizes_0[p]

    # Complete the block family
    failures = []
    full = FoldBlocks({}, {}, c_m1, c_0, layout_m1, layout_0)
    for name, given, target in (('phim1', blocks.blocks_m1, full.blocks_m1), ('phi0', blocks.blocks_0, full.blocks_0)):
        for (p, q), blk in given.items():
            if q > p + 1 and not blk.is_zero():
                failures.append('{0} block ({1},{2}) must vanish'.format(name, p, q))
            elif q <= p:
                target[(p, q)] = blk
    for p in indices:
        sd_m1, sd_0 = superdiagonal(c_m1, c_0, p)
        if p + 1 in sizes_m1:
            for name, given, forced, target in (('phim1', blocks.blocks_m1, sd_m1, full.blocks_m1),
                                                ('phi0', blocks.blocks_0, sd_0, full.blocks_0)):
                if (p, p + 1) in given and given[(p, p + 1)] != forced:
                    failures.append('{0} block ({1},{2}) differs from the differential'.format(name, p, p + 1))
                target[(p, p + 1)] = forced
    if failures:
        raise ValidationError('blocks do not fit the complexes', failures)

    # Identities of the blocks
    report = check_fold_identities(ring, w, indices, full, sizes_m1, sizes_0)
    report.raise_if_invalid()

    # Assemble, block (q, p) of each matrix is the map from summand p to summand q
    phim1 = block(ring, [[full.blocks_m1.get((p, q)) for p in indices] for q in indices],
                  [sizes_m1[q] for q in indices], [sizes_0[p] for p in indices])
    phi0 = block(ring, [[full.blocks_0.get((p, q)) for p in indices] for q in indices],
                 [sizes_0[q] for q in indices], [sizes_m1[p] for p in indices])
    E = Factorization(ring, w,
                      tuple(a for p in indices for a in twists_m1[p]),
                      tuple(a for p in indices for a in twists_0[p]),
                      phi0, phim1, graded)
    validate_factorization(E).raise_if_invalid()
    return E, full


def fold(
        c_m1,
        c_0,
        blocks,
        w,
        graded=True
    ):
    """Folds a pair of bounded complexes, see `fold_data`."""
    return fold_data(c_m1, c_0, blocks, w, graded)[0]


def shift_fold(blocks):
    """
    Fold data of E[1] from fold data of E.

    Args:
        blocks: `FoldBlocks` - Complete blocks of a folding E of (A^-1, A^0).

    Notes:

    * E[1] folds (A^-1[1], A^0[1]), summand p of E becomes summand p - 1.
    * E[1]^-1 = E^0 and E[1]^0 = Phi(E^-1) keep their generator order.
    * Block (p, q) of phi^-1 is the negated block (p + 1, q + 1) of phi^0 and vice versa.
    """

    def moved(family):
        return {(p - 1, q - 1): -b for (p, q), b in family.items()}

    return FoldBlocks(moved(blocks.blocks_0), moved(blocks.blocks_m1),
                      shift_complex(blocks.c_m1), shift_complex(blocks.c_0),
                      {p - 1: positions for p, positions in blocks.layout_0.items()},
                      {p - 1: positions for p, positions in blocks.layout_m1.items()})


def unfold(
        E,
        layout_m1,
        layout_0
    ):
    """
    Reads a factorization as a folding along the given summand layouts.

    Args:
        E: `Factorization` - Factorization to decompose.
        layout_m1: `dict` - p -> positions inside E^-1.
        layout_0: `dict` - p -> positions inside E^0.

    Notes:

    * The complexes are recovered from the superdiagonal blocks and the twists.
    * Raises `ValidationError` when a block with q > p + 1 is nonzero.
    """

    ring, d = E.ring, E.degree
    indices = sorted(set(layout_m1) | set(layout_0), reverse=True)
    blocks = FoldBlocks(layout_m1=dict(layout_m1), layout_0=dict(layout_0))
    failures = []
    for p in indices:
        for q in indices:
            bm1 = E.phim1.submatrix(layout_m1.get(q, ()), layout_0.get(p, ()))
            b0 = E.phi0.submatrix(layout_0.get(q, ()), layout_m1.get(p, ()))
            if q > p + 1:
                if not (bm1.is_zero() and b0.is_zero()):
                    failures.append('block ({0},{1}) must vanish'.format(p, q))
                continue
            blocks.blocks_m1[(p, q)] = bm1
            blocks.blocks_0[(p, q)] = b0
    if failures:
        raise ValidationError('factorization is not folded along this layout', failures)

    # Modules
    modules_m1, modules_0 = {}, {}
    for p in indices:
        l = p // 2
        t_m1 = tuple(E.e1[i] for i in layout_m1.get(p, ()))
        t_0 = tuple(E.e0[i] for i in layout_0.get(p, ()))
        if p % 2 == 0:
            modules_m1[p] = tuple(a + l * d for a in t_m1)
            modules_0[p] = tuple(a + l * d for a in t_0)
        else:
            modules_0[p] = tuple(a + (l + 1) * d for a in t_m1)
            modules_m1[p] = tuple(a + l * d for a in t_0)

    # Differentials from the superdiagonal
    diffs_m1, diffs_0 = {}, {}
    for p in indices:
        if p + 1 not in layout_m1 and p + 1 not in layout_0:
            continue
        bm1, b0 = blocks.blocks_m1[(p, p + 1)], blocks.blocks_0[(p, p + 1)]
        if p % 2:
            diffs_m1[p + 1], diffs_0[p + 1] = bm1, -b0
        else:
            diffs_m1[p + 1], diffs_0[p + 1] = b0, -bm1
    blocks.c_m1 = _complex_on(ring, indices, modules_m1, diffs_m1)
    blocks.c_0 = _complex_on(ring, indices, modules_0, diffs_0)
    return blocks


def _complex_on(ring, indices, modules, diffs):
    A = make_complex(ring, modules, diffs)
    if not A.modules:
        return A
    return FreeComplex(ring, min(indices), max(indices), A.modules, A.diffs)


def reorder(E, order_m1, order_0):
    """The same factorization with its generators listed in the given orders."""
    return Factorization(E.ring, E.w,
                         tuple(E.e1[i] for i in order_m1), tuple(E.e0[i] for i in order_0),
                         E.phi0.submatrix(order_0, order_m1), E.phim1.submatrix(order_m1, order_0), E.graded)


def fold_cone(
        eta,
        source_blocks,
        target_blocks
    ):
    """
    The cone of a morphism between folded factorizations, together with its own fold data.

    Args:
        eta: `FactMorphism` - Morphism A -> B.
        source_blocks: `FoldBlocks` - Complete fold data of A.
        target_blocks: `FoldBlocks` - Complete fold data of B.

    Notes:

    * eta must have vanishing components eta_{p,q} for q > p.
    * Its diagonal components must be chain maps between the underlying complexes.
    * Summand p of the cone is summand p + 1 of A[1] next to summand p of B, so eta_{p,p} sits in phi_{p-1,p}.
    * The recovered complexes are Cone(eta~^-1) and Cone(-eta~^0), the second one isomorphic to Cone(eta~^0).
    * Returns `cone(eta)` unchanged and the `FoldBlocks` it carries.
    """

    validate_morphism(eta).raise_if_invalid()
    A, B = eta.source, eta.target
    sa, sb = source_blocks, target_blocks
    source_indices = set(sa.layout_m1) | set(sa.layout_0)
    target_indices = set(sb.layout_m1) | set(sb.layout_0)
    summands = sorted(source_indices | target_indices, reverse=True)

    # Components of eta on the summands
    report = Report('folded morphism')
    diag_m1, diag_0 = {}, {}
    for p in summands:
        for q in summands:
            em1 = eta.gm1.submatrix(sb.layout_m1.get(q, ()), sa.layout_m1.get(p, ()))
            e0 = eta.g0.submatrix(sb.layout_0.get(q, ()), sa.layout_0.get(p, ()))
            if q > p and not (em1.is_zero() and e0.is_zero()):
                report.failures.append('eta ({0},{1}) must vanish'.format(p, q))
            if q == p:
                if p % 2 == 0:
                    diag_m1[p], diag_0[p] = em1, e0
                else:
                    diag_m1[p], diag_0[p] = e0, em1
    check_chain_map(report, 'eta on A^-1', sa.c_m1, sb.c_m1, diag_m1)
    check_chain_map(report, 'eta on A^0', sa.c_0, sb.c_0, diag_0)
    report.raise_if_invalid()

    # The cone has components A^0 + B^-1 and Phi(A^-1) + B^0
    C = cone(eta)
    ra1, ra0 = A.ranks
    indices = sorted({p - 1 for p in source_indices} | target_indices, reverse=True)
    layout_m1 = {p: tuple(sa.layout_0.get(p + 1, ())) + tuple(ra0 + i for i in sb.layout_m1.get(p, ()))
                 for p in indices}
    layout_0 = {p: tuple(sa.layout_m1.get(p + 1, ())) + tuple(ra1 + i for i in sb.layout_0.get(p, ()))
                for p in indices}
    blocks = unfold(C, layout_m1, layout_0)

    # The recovered complexes are the cones of the diagonal chain maps
    for A_ in (blocks.c_m1, blocks.c_0):
        validate_complex(A_, C.graded).raise_if_invalid()
    if blocks.c_m1 != cone_complex(sa.c_m1, sb.c_m1, diag_m1):
        raise ValidationError('cone does not fold the cone of eta on A^-1')
    if blocks.c_0 != cone_complex(sa.c_0, sb.c_0, {p: -m for p, m in diag_0.items()}):
        raise ValidationError('cone does not fold the cone of eta on A^0')

    # The recovered complexes and blocks must fold back to the cone
    lower = FoldBlocks({k: b for k, b in blocks.blocks_m1.items() if k[1] <= k[0]},
                       {k: b for k, b in blocks.blocks_0.items() if k[1] <= k[0]})
    folded, full = fold_data(blocks.c_m1, blocks.c_0, lower, C.w, C.graded)
    order_m1 = [i for p in indices for i in layout_m1[p]]
    order_0 = [i for p in indices for i in layout_0[p]]
    if reorder(C, order_m1, order_0) != folded:
        raise ValidationError('cone does not fold the recovered complexes')
    return C, blocks


def stabilize_data(
        ring,
        sequence,
        w,
        splitting=None,
        graded=True
    ):
    """
    Stabilization of R/(x_1..x_n) with its fold data.

    Args:
        ring: `GradedRing` - Base ring.
        sequence: `list` of `str` - Variables x_1..x_n.
        w: `PolyElement` - Potential in the ideal of the sequence.
        splitting: `list` of `PolyElement` - w_1..w_n, found by greedy division when omitted.
        graded: `bool` - Graded mode flag.

    Notes:

    * Folds the zero complex with the Koszul complex, whose differential enters with a sign flip so both maps are d + h.
    * Only the diagonal-adjacent blocks are nonzero because h^2 = 0.
    """

    data = koszul_data(ring, sequence, w, splitting)
    K = negate(data.complex)
    blocks = FoldBlocks()
    for p in range(K.lo, K.hi + 1):
        h = homotopy_at(data, p)
        if not h.rows:
            continue
        if p % 2 == 0:
            blocks.blocks_m1[(p, p - 1)] = h
        else:
            blocks.blocks_0[(p, p - 1)] = h
    E, full = fold_data(zero_complex(ring), K, blocks, w, graded)
    return E, full, data


def stabilize(
        ring,
        sequence,
        w,
        splitting=None,
        graded=True
    ):
    """The stabilization (d + h, d + h) of R/(x_1..x_n), see `stabilize_data`."""
    return stabilize_data(ring, sequence, w, splitting, graded)[0]


def totalize(
        objects,
        maps,
        start=0
    ):
    """
    Totalization of a bounded complex of factorizations E_start -> E_start+1 -> ...

    Args:
        objects: `list` of `Factorization` - Terms of the complex.
        maps: `list` of `FactMorphism` - maps[i] : objects[i] -> objects[i+1].
        start: `int` - Index of the first term.

    Notes:

    * T is the sum of the E_l[-l] with the maps g placed below the diagonal.
    * Raises `ValidationError` if two consecutive maps do not compose to zero.
    """

    if len(maps) != len(objects) - 1:
        raise ValidationError('a chain of {0} objects needs {1} maps'.format(len(objects), len(objects) - 1))
    for i, g in enumerate(maps):
        validate_morphism(g).raise_if_invalid()
        if g.source != objects[i] or g.target != objects[i + 1]:
            raise ValidationError('map {0} does not connect terms {0} and {1}'.format(i, i + 1))
    for i in range(len(maps) - 1):
        composite = compose(maps[i + 1], maps[i])
        if not (composite.g0.is_zero() and composite.gm1.is_zero()):
            raise ValidationError('maps {0} and {1} do not compose to zero'.format(i, i + 1))

    if len(objects) == 1:
        return objects[0]

    ring = objects[0].ring
    shifted = [shift(E, -(start + i)) for i, E in enumerate(objects)]
    n = len(objects)
    sizes_m1 = [len(S.e1) for S in shifted]
    sizes_0 = [len(S.e0) for S in shifted]
    grid_0 = [[None] * n for _ in range(n)]
    grid_m1 = [[None] * n for _ in range(n)]
    for i, S in enumerate(shifted):
        grid_0[i][i] = S.phi0
        grid_m1[i][i] = S.phim1
    for i, g in enumerate(maps):
        if (start + i) % 2 == 0:
            grid_0[i + 1][i], grid_m1[i + 1][i] = g.gm1, g.g0
        else:
            grid_0[i + 1][i], grid_m1[i + 1][i] = g.g0, g.gm1
    T = Factorization(ring, objects[0].w,
                      tuple(a for S in shifted for a in S.e1), tuple(a for S in shifted for a in S.e0),
                      block(ring, grid_0, sizes_0, sizes_m1), block(ring, grid_m1, sizes_m1, sizes_0),
                      all(E.graded for E in objects))
    validate_factorization(T).raise_if_invalid()
    return T
