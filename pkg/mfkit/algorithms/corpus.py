"""Registry of named example factorizations, each with the properties it must satisfy."""

from dataclasses import dataclass, field

from mfkit.algorithms.factorization import (
    FactMorphism, Report, cone, contractible_envelope, direct_sum, identity_morphism, make_factorization,
    validate_factorization, validate_morphism,
)
from mfkit.algorithms.fold import stabilize_data, totalize
from mfkit.algorithms.hom import hom_classes, is_contractible
from mfkit.algorithms.koszul import check_koszul
from mfkit.utilities.errors import MfkitError
from mfkit.utilities.matrix import block, from_rows, identity
from mfkit.utilities.ring import make_ring, monomial, parse_poly


STAB_VARS = ('x', 'y', 'z', 't', 'u')


@dataclass(frozen=True)
class ExampleEntry:
    """
    A named constructor with default parameters and a manifest of expected properties.

    Args:
        name: `str` - Registry key.
        parameters: `dict` - Parameter names and default values.
        constructor: `callable` - Builds the factorization from the parameters.
        manifest: `tuple` - Pairs (label, check) where check maps the factorization and parameters to a bool.
        description: `str` - One line summary.
    """

    name: str
    parameters: dict
    constructor: object
    manifest: tuple = field(default_factory=tuple)
    description: str = ''

    def build(self, **overrides):
        unknown = set(overrides) - set(self.parameters)
        if unknown:
            raise MfkitError('{0} takes no parameter {1}'.format(self.name, sorted(unknown)))
        params = dict(self.parameters, **overrides)
        return self.constructor(**params), params

    def check(self, **overrides):
        """Builds the example and runs its manifest."""
        E, params = self.build(**overrides)
        report = Report('{0}({1})'.format(self.name, ', '.join('{0}={1}'.format(k, v) for k, v in params.items())))
        for label, check in self.manifest:
            try:
                if not check(E, params):
                    report.failures.append(label)
            except MfkitError as error:
                report.failures.append('{0}: {1}'.format(label, error))
        return report


# Constructors

def mf_pair(a=1, d=3):
    """
    (x^a, x^(d-a)) as a factorization of x^d over k[x].

    Notes:

    * E^0 = R and E^-1 = R(-a), so phi^0 = x^a and phi^-1 = x^(d-a) are homogeneous of degree zero.
    """

    a, d = int(a), int(d)
    if not 0 <= a <= d or d < 1:
        raise MfkitError('mf_pair needs 0 <= a <= d and d >= 1, got a={0} d={1}'.format(a, d))
    ring = make_ring('x')
    w = monomial(ring, [d])
    return make_factorization(ring, w, from_rows(ring, [[monomial(ring, [a])]]),
                              from_rows(ring, [[monomial(ring, [d - a])]]), e1=[-a], e0=[0])


def stab_koszul(n=1, w=None):
    """
    The stabilization of R/(x_1..x_n) for a potential in their ideal.

    Args:
        n: `int` - Number of variables, at most five.
        w: `str` - Potential, the sum of the squares when omitted.
    """

    n = int(n)
    if not 1 <= n <= len(STAB_VARS):
        raise MfkitError('stab_koszul takes 1 to {0} variables'.format(len(STAB_VARS)))
    names = STAB_VARS[:n]
    ring = make_ring(list(names))
    w = parse_poly(ring, w) if w is not None else sum((g**2 for g in ring.gens), ring.zero)
    return stabilize_data(ring, list(names), w)[0]


def base_factorization(a=1, d=3, base='mf_pair', n=1, w=None):
    """The factorization a derived example starts from, mf_pair(a, d) or stab_koszul(n, w)."""
    if base == 'mf_pair':
        return mf_pair(a, d)
    if base == 'stab_koszul':
        return stab_koszul(n, w)
    raise MfkitError('unknown base {0!r}, known: mf_pair, stab_koszul'.format(base))


def envelope(a=1, d=3, base='mf_pair', n=1, w=None):
    """The contractible envelope of the base factorization."""
    return contractible_envelope(base_factorization(a, d, base, n, w))[0]


def cone_id(a=1, d=3, base='mf_pair', n=1, w=None):
    """The cone of the identity of the base factorization."""
    return cone(identity_morphism(base_factorization(a, d, base, n, w)))


def id_chain(E):
    """0 -> E -> E -> 0 along the identity."""
    return [E, E], [identity_morphism(E)]


def split_ses(E):
    """0 -> E -> E + E -> E -> 0 along the inclusion of the first and the projection to the second summand."""
    ring = E.ring
    r1, r0 = E.ranks
    S = direct_sum(E, E)
    inc = FactMorphism(E, S, block(ring, [[identity(ring, r0)], [None]], [r0, r0], [r0]),
                       block(ring, [[identity(ring, r1)], [None]], [r1, r1], [r1]))
    proj = FactMorphism(S, E, block(ring, [[None, identity(ring, r0)]], [r0], [r0, r0]),
                        block(ring, [[None, identity(ring, r1)]], [r1], [r1, r1]))
    return [E, S, E], [inc, proj]


def id_chain_tot(a=1, d=3, base='mf_pair', n=1, w=None):
    """Totalization of the identity chain on the base factorization."""
    return totalize(*id_chain(base_factorization(a, d, base, n, w)))


def split_ses_tot(a=1, d=3, base='mf_pair', n=1, w=None):
    """Totalization of the split short exact chain on the base factorization."""
    return totalize(*split_ses(base_factorization(a, d, base, n, w)))


# Manifest checks

def _valid(E, params):
    return validate_factorization(E).valid


def _contractible(E, params):
    return is_contractible(E)[0]


def _self_hom(E, params):
    expected = 0 if params['a'] in (0, params['d']) else 1
    return hom_classes(E, E, 0, 0).dim == expected


def _koszul(E, params):
    ring = E.ring
    names = list(STAB_VARS[:int(params['n'])])
    w = E.w
    return check_koszul(stabilize_data(ring, names, w)[2]).valid


def _envelope_map(E, params):
    base = base_factorization(**params)
    G, g = contractible_envelope(base)
    injective = g.gm1.rank() == len(base.e1) and g.g0.rank() == len(base.e0)
    return validate_morphism(g).valid and injective and G == E


DERIVED_PARAMETERS = {'a': 1, 'd': 3, 'base': 'mf_pair', 'n': 1, 'w': None}

REGISTRY = {
    'mf_pair': ExampleEntry('mf_pair', {'a': 1, 'd': 3}, mf_pair,
                            (('valid', _valid), ('self-Hom dim at (0,0)', _self_hom)),
                            '(x^a, x^(d-a)) factoring x^d'),
    'stab_koszul': ExampleEntry('stab_koszul', {'n': 1, 'w': None}, stab_koszul,
                                (('valid', _valid), ('koszul identities', _koszul)),
                                'stabilization of R/(x_1..x_n)'),
    'envelope': ExampleEntry('envelope', DERIVED_PARAMETERS, envelope,
                             (('valid', _valid), ('monomorphism', _envelope_map), ('contractible', _contractible)),
                             'contractible envelope of mf_pair(a, d) or stab_koszul(n, w)'),
    'cone_id': ExampleEntry('cone_id', DERIVED_PARAMETERS, cone_id,
                            (('valid', _valid), ('contractible', _contractible)),
                            'cone of the identity of the base factorization'),
    'id_chain_tot': ExampleEntry('id_chain_tot', DERIVED_PARAMETERS, id_chain_tot,
                                 (('valid', _valid), ('contractible', _contractible)),
                                 'totalization of E -> E along the identity'),
    'split_ses_tot': ExampleEntry('split_ses_tot', DERIVED_PARAMETERS, split_ses_tot,
                                  (('valid', _valid), ('contractible', _contractible)),
                                  'totalization of the split sequence E -> E + E -> E'),
}


def get_example(name):
    """Looks up a registry entry, the error lists every known name."""
    if name not in REGISTRY:
        raise MfkitError('unknown example {0!r}, known: {1}'.format(name, ', '.join(sorted(REGISTRY))))
    return REGISTRY[name]


def build_example(name, **params):
    """Builds a registry example with the given parameters."""
    return get_example(name).build(**params)[0]
