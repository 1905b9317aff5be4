"""Exact polynomial arithmetic over weighted graded rings."""

import functools
from dataclasses import dataclass
from dataclasses import field as dataclass_field

from sympy import Symbol, isprime
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.domains import FF, QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from .errors import GradingError, MfkitError, RingMismatchError


RATIONALS = 'Q'
PRIME_FIELD = 'Fp'


@dataclass(frozen=True)
class FieldSpec:
    """
    Coefficient field of a ring.

    Args:
        kind: `str` - Either `'Q'` for the rationals or `'Fp'` for a prime field.
        p: `int` - Prime modulus, only used when `kind` is `'Fp'`.
    """

    kind: str = RATIONALS
    p: int = 0

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p:
                raise MfkitError('the rational field takes no modulus')
        elif self.kind == PRIME_FIELD:
            if not (1 < self.p < 2**31 and isprime(self.p)):
                raise MfkitError('modulus {0} is not a prime below 2^31'.format(self.p))
        else:
            raise MfkitError('unknown field kind {0!r}'.format(self.kind))

    @property
    def domain(self):
        """The sympy domain realizing the field."""
        if self.kind == RATIONALS:
            return QQ
        return FF(self.p)

    def __str__(self):
        if self.kind == RATIONALS:
            return 'QQ'
        return 'GF({0})'.format(self.p)


@dataclass(frozen=True)
class GradedRing:
    """
    Polynomial ring k[x_1, ..., x_n] with a positive weight per variable.

    Args:
        vars: `tuple` of `str` - Variable names in order.
        weights: `tuple` of `int` - Weighted degree of each variable.
        field: `FieldSpec` - Coefficient field.

    Notes:

    * Elements are sympy `PolyElement` objects of `poly_ring`, ordered graded lexicographically.
    * Equal rings share the same sympy ring, so their elements mix freely.
    """

    vars: tuple
    weights: tuple
    field: FieldSpec = dataclass_field(default_factory=FieldSpec)

    def __post_init__(self):
        if len(set(self.vars)) != len(self.vars):
            raise MfkitError('variable names must be distinct: {0}'.format(self.vars))
        if len(self.weights) != len(self.vars):
            raise MfkitError('one weight per variable is required')
        if any(int(w) < 1 for w in self.weights):
            raise GradingError('weights must be positive: {0}'.format(self.weights))

    @functools.cached_property
    def poly_ring(self):
        symbols = [Symbol(name) for name in self.vars]
        return PolyRing(symbols, self.field.domain, grlex)

    @property
    def domain(self):
        return self.field.domain

    @property
    def ngens(self):
        return len(self.vars)

    @property
    def gens(self):
        return self.poly_ring.gens

    @property
    def zero(self):
        return self.poly_ring.zero

    @property
    def one(self):
        return self.poly_ring.one

    def gen(self, name):
        """Returns the generator called `name`."""
        return self.gens[self.vars.index(name)]

    def __str__(self):
        pairs = ','.join('{0}:{1}'.format(v, w) for v, w in zip(self.vars, self.weights))
        return '{0}[{1}]'.format(self.field, pairs)


def make_ring(
        vars,
        weights=None,
        field=None
    ):
    """
    Creates a graded ring.

    Args:
        vars: `str` or `list` of `str` - Variable names, a comma separated string is accepted.
        weights: `list` of `int` - Variable weights, all ones when omitted.
        field: `FieldSpec` or `int` - Coefficient field, an integer selects the prime field of that order.
    """

    if isinstance(vars, str):
        vars = [v.strip() for v in vars.split(',') if v.strip()]
    if weights is None:
        weights = [1] * len(vars)
    if field is None:
        field = FieldSpec()
    elif isinstance(field, int):
        field = FieldSpec(PRIME_FIELD, field)
    return GradedRing(tuple(vars), tuple(int(w) for w in weights), field)


def check_same_ring(ring, *polys):
    """Raises `RingMismatchError` unless every polynomial belongs to `ring`."""
    for p in polys:
        if p.ring != ring.poly_ring:
            raise RingMismatchError('polynomial {0} does not belong to {1}'.format(p, ring))


def poly_mul(p, q):
    """
    Multiplies two polynomials of the same ring.

    Args:
        p: `PolyElement` - Left factor.
        q: `PolyElement` - Right factor.
    """

    if p.ring != q.ring:
        raise RingMismatchError('cannot multiply polynomials of different rings')
    return p * q


def monomial_degree(ring, monom):
    """Weighted degree of an exponent vector."""
    return sum(e * w for e, w in zip(monom, ring.weights))


def homogeneous_degree(ring, p):
    """
    Weighted degree of a homogeneous polynomial.

    Args:
        ring: `GradedRing` - Ring providing the weights.
        p: `PolyElement` - Polynomial to inspect.

    Notes:

    * Returns a pair `(degree, is_zero)`.
    * The zero polynomial has every degree and yields `(None, True)`.
    * A polynomial mixing degrees yields `(None, False)`.
    """

    if not p:
        return None, True
    degrees = {monomial_degree(ring, m) for m in p.keys()}
    if len(degrees) == 1:
        return degrees.pop(), False
    return None, False


def is_homogeneous_of(ring, p, degree):
    """True when `p` is zero or homogeneous of weighted degree `degree`."""
    deg, is_zero = homogeneous_degree(ring, p)
    return is_zero or deg == degree


def total_degree(p):
    """Ordinary (unweighted) total degree, -1 for zero."""
    if not p:
        return -1
    return max(sum(m) for m in p.keys())


@functools.lru_cache(maxsize=None)
def _monomials(weights, degree):

    # Empty set of variables
    if not weights:
        return [()] if degree == 0 else []

    # Recurse on the exponent of the first variable
    result = []
    w = weights[0]
    for e in range(degree // w, -1, -1):
        for rest in _monomials(weights[1:], degree - e * w):
            result.append((e,) + rest)
    return result


def monomials_of_degree(ring, degree):
    """
    Lists all exponent vectors of a given weighted degree.

    Args:
        ring: `GradedRing` - Ring providing the weights.
        degree: `int` - Weighted degree.

    Notes:

    * Negative degrees have no monomials.
    * The order is lexicographically descending and therefore deterministic.
    """

    if degree < 0:
        return []
    return list(_monomials(tuple(ring.weights), int(degree)))


def monomials_up_to(ring, cap):
    """All exponent vectors whose unweighted total degree is at most `cap`."""
    ones = (1,) * ring.ngens
    result = []
    for d in range(cap + 1):
        result.extend(_monomials(ones, d))
    return result


def graded_piece_basis(
        ring,
        twists,
        degree
    ):
    """
    Basis of the degree `degree` piece of the free module sum R(a_i).

    Args:
        ring: `GradedRing` - Base ring.
        twists: `list` of `int` - Twist a_i of each generator.
        degree: `int` - Internal degree.

    Notes:

    * Returns a list of `(generator index, monomial)` pairs, monomials of degree `degree + a_i` in slot i.
    """

    basis = []
    for i, a in enumerate(twists):
        for monom in monomials_of_degree(ring, degree + a):
            basis.append((i, monom))
    return basis


def monomial(ring, exps, coeff=1):
    """Builds the term `coeff * x^exps`."""
    return ring.poly_ring.from_dict({tuple(exps): ring.domain.convert(coeff)})


def poly_from_terms(ring, terms):
    """
    Builds a polynomial from `(coefficient, exponent vector)` pairs.

    Args:
        ring: `GradedRing` - Target ring.
        terms: `list` of `tuple` - Coefficients must already be domain elements or integers.
    """

    result = ring.zero
    for coeff, exps in terms:
        if len(exps) != ring.ngens:
            raise MfkitError('exponent vector {0} has the wrong arity for {1}'.format(list(exps), ring))
        if any(e < 0 for e in exps):
            raise MfkitError('negative exponent in {0}'.format(list(exps)))
        result = result + monomial(ring, exps, coeff)
    return result


def poly_terms(p):
    """Terms of `p` in canonical graded lexicographic order, leading term first."""
    return p.terms()


def parse_poly(ring, text):
    """
    Parses a polynomial written in the usual infix syntax, `^` is accepted for powers.

    Args:
        ring: `GradedRing` - Ring whose variables may appear.
        text: `str` - Polynomial text such as `"x^2 - 3/2*y"`.
    """

    local = {name: Symbol(name) for name in ring.vars}
    try:
        expr = parse_expr(text.replace('^', '**'), local_dict=local)
        return ring.poly_ring.from_expr(expr)
    except Exception as error:
        raise MfkitError('cannot read {0!r} as a polynomial over {1}: {2}'.format(text, ring, error))


def format_poly(p):
    """Human readable text of a polynomial using `^` for powers."""
    return str(p).replace('**', '^')


def coeff_to_string(ring, c):
    """
    Canonical text of a coefficient.

    Notes:

    * Rationals print as reduced fractions such as `-3/7`.
    * Prime field residues print as integers in `[0, p)`.
    """

    value = ring.domain.to_sympy(c)
    if ring.field.kind == PRIME_FIELD:
        return str(int(value) % ring.field.p)
    return str(value)


def coeff_from_string(ring, text):
    """Reads a coefficient written as an integer or a fraction `a/b`."""
    text = text.strip()
    if '/' in text:
        num, den = text.split('/', 1)
        num, den = int(num), int(den)
    else:
        num, den = int(text), 1
    if den == 0:
        raise MfkitError('zero denominator in coefficient {0!r}'.format(text))
    return convert_rational(ring, num, den)


def convert_rational(ring, num, den):
    """Maps the rational `num/den` into the coefficient field of `ring`."""
    K = ring.domain
    if ring.field.kind == PRIME_FIELD and den % ring.field.p == 0:
        raise MfkitError('denominator {0} is not invertible modulo {1}'.format(den, ring.field.p))
    return K.convert(num) / K.convert(den)


def convert_coefficient(source, target, c):
    """
    Maps a coefficient of `source` into the field of `target`.

    Notes:

    * Rational to prime field reduction needs the denominator coprime to p.
    * A prime field coefficient only maps into the same prime field.
    """

    if source.field == target.field:
        return c
    if source.field.kind == RATIONALS:
        value = source.domain.to_sympy(c)
        return convert_rational(target, int(value.p), int(value.q))
    raise RingMismatchError('cannot map coefficients of {0} into {1}'.format(source.field, target.field))


def substitute(
        source,
        target,
        p,
        images
    ):
    """
    Applies the ring map sending the i-th variable of `source` to `images[i]` in `target`.

    Args:
        source: `GradedRing` - Ring of `p`.
        target: `GradedRing` - Ring of the images.
        p: `PolyElement` - Polynomial to map.
        images: `list` of `PolyElement` - Image of each source variable.
    """

    if len(images) != source.ngens:
        raise MfkitError('{0} images given for {1} variables'.format(len(images), source.ngens))
    check_same_ring(target, *images)

    result = target.zero
    for monom, coeff in p.terms():
        term = target.poly_ring.ground_new(convert_coefficient(source, target, coeff))
        for image, e in zip(images, monom):
            if e:
                term = term * image**e
        result = result + term
    return result
