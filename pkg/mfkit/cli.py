"""Command line front end."""

import argparse
import re
import sys

from mfkit.algorithms.complex import zero_complex
from mfkit.algorithms.corpus import REGISTRY, get_example
from mfkit.algorithms.factorization import cone, shift, validate_factorization
from mfkit.algorithms.fold import stabilize
from mfkit.algorithms.hom import hom_table
from mfkit.algorithms.koszul import koszul_complex
from mfkit.algorithms.spectral import DERIVED, PRINTED, direct_hom_dims, e1_page, ss_degeneration_check
from mfkit.selftest import DEFAULT_SEED, run_selftest
from mfkit.utilities.errors import DocumentError, MfkitError, ValidationError
from mfkit.utilities.log import flush_hom_log, log_hom_dimension
from mfkit.utilities.print import print_e1_table, print_hom_table, print_report
from mfkit.utilities.ring import make_ring, parse_poly
from mfkit.utilities.save import (
    FACTORIZATION, MORPHISM, RESOLUTIONS, Document, load_document, save_document, validate_document,
)


EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


def _factorization_document(E):
    return Document(E.ring, E.w, E.graded, FACTORIZATION, E)


def _load_factorization(path):
    document = load_document(path)
    if document.payload_type != FACTORIZATION:
        raise DocumentError('expected a factorization, got {0}'.format(document.payload_type), 'payload.type')
    return document.payload


def _int_range(text):
    """Reads `a:b` as the inclusive range a..b, or a single integer."""
    if ':' in text:
        lo, hi = text.split(':', 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_validate(args):
    document = load_document(args.path, validate=False)
    report = validate_document(document)
    print_report(report)
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_stabilize(args):
    weights = [int(v) for v in args.weights.split(',')] if args.weights else None
    ring = make_ring(args.vars, weights, args.field)
    w = parse_poly(ring, args.w)
    sequence = [v.strip() for v in args.sequence.split(',') if v.strip()]
    splitting = [parse_poly(ring, s) for s in args.split.split(';')] if args.split else None
    E = stabilize(ring, sequence, w, splitting, not args.ungraded)
    print('ranks {0} x {1}'.format(*E.ranks), file=sys.stderr)
    save_document(_factorization_document(E), args.output)
    return EXIT_OK


def cmd_cone(args):
    document = load_document(args.path)
    if document.payload_type != MORPHISM:
        raise DocumentError('expected a morphism, got {0}'.format(document.payload_type), 'payload.type')
    save_document(_factorization_document(cone(document.payload)), args.output)
    return EXIT_OK


def cmd_shift(args):
    E = _load_factorization(args.path)
    save_document(_factorization_document(shift(E, args.n)), args.output)
    return EXIT_OK


def cmd_hom(args):
    E, F = _load_factorization(args.source), _load_factorization(args.target)
    ns = _int_range(args.n)
    degrees = _int_range(args.degree) if args.degree is not None else None
    if E.graded and F.graded and degrees is None:
        degrees = [0]
    table = hom_table(E, F, ns, degrees, args.cap)
    print_hom_table(table)
    if args.log:
        for (n, t), classes in table.items():
            log_hom_dimension('{0}->{1}'.format(args.source, args.target), n, t, classes.dim, args.log)
        flush_hom_log(args.log)
    return EXIT_OK


def _koszul_sequence(ring, resolution):
    """The variable sequence whose Koszul complex is `resolution`, or `None`."""
    if resolution.lo == resolution.hi:
        return None
    d = resolution.diff(0)
    sequence = []
    for j in range(d.cols):
        entry = d[0, j]
        matches = [name for name, g in zip(ring.vars, ring.gens) if entry in (g, -g)]
        if not matches:
            return None
        sequence.append(matches[0])
    try:
        if koszul_complex(ring, sequence) == resolution:
            return sequence
    except MfkitError:
        return None
    return None


def cmd_e1(args):
    document = load_document(args.resolutions)
    if document.payload_type != RESOLUTIONS:
        raise DocumentError('expected resolutions, got {0}'.format(document.payload_type), 'payload.type')
    F = _load_factorization(args.target)
    totals = _int_range(args.totals)
    table = e1_page(document.payload, F, args.degree, totals, args.variant)

    # Replacement of E for the direct comparison
    P = None
    if args.replacement:
        P = _load_factorization(args.replacement)
    else:
        res_m1, res_0 = document.payload
        sequence = _koszul_sequence(F.ring, res_0)
        if res_m1 == zero_complex(F.ring) and sequence:
            P = stabilize(F.ring, sequence, F.w, graded=F.graded)

    degeneration = None
    if P is not None:
        degeneration = ss_degeneration_check(table, direct_hom_dims(P, F, totals, args.degree))
    print_e1_table(table, degeneration)
    if degeneration is not None and not degeneration.report.valid:
        return EXIT_INVALID
    return EXIT_OK


def _parameter(text):
    if '=' not in text:
        raise MfkitError('parameters are written key=value, got {0!r}'.format(text))
    key, value = text.split('=', 1)
    try:
        return key, int(value)
    except ValueError:
        return key, value


def cmd_example(args):
    if args.list:
        for name, entry in sorted(REGISTRY.items()):
            print('{0:<15} {1}  {2}'.format(name, entry.parameters, entry.description))
        return EXIT_OK
    entry = get_example(args.name)
    params = dict(_parameter(p) for p in args.params)
    if args.check:
        report = entry.check(**params)
        print_report(report)
        return EXIT_OK if report.valid else EXIT_INVALID
    E = entry.build(**params)[0]
    validate_factorization(E).raise_if_invalid()
    save_document(_factorization_document(E), args.output)
    return EXIT_OK


def cmd_selftest(args):
    failed = run_selftest(args.seed, args.suite)
    return EXIT_OK if failed == 0 else EXIT_INVALID


def build_parser():
    parser = argparse.ArgumentParser(prog='mfkit', description='Exact matrix factorization toolkit.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('validate', help='Check a document against its identities.')
    p.add_argument('path', help='Document path, - for standard input.')
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser('stabilize', help='Stabilization of R/(x_1..x_n).')
    p.add_argument('--vars', required=True, help='Comma separated variable names.')
    p.add_argument('--weights', default=None, help='Comma separated weights, all ones by default.')
    p.add_argument('--field', type=int, default=None, help='Prime modulus, rationals when omitted.')
    p.add_argument('--w', required=True, help='Potential, e.g. "x^2*y".')
    p.add_argument('--sequence', required=True, help='Comma separated variables of the sequence.')
    p.add_argument('--split', default=None, help='Semicolon separated w_1..w_n.')
    p.add_argument('--ungraded', action='store_true', help='Take Phi to be the identity.')
    p.add_argument('-o', '--output', default='-', help='Output path, - for standard output.')
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser('cone', help='Cone of a morphism document.')
    p.add_argument('path')
    p.add_argument('-o', '--output', default='-')
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser('shift', help='Shift a factorization document.')
    p.add_argument('path')
    p.add_argument('--n', type=int, default=1)
    p.add_argument('-o', '--output', default='-')
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser('hom', help='Hom dimensions in the homotopy category.')
    p.add_argument('source')
    p.add_argument('target')
    p.add_argument('--n', default='0', help='Degree or inclusive range a:b.')
    p.add_argument('--degree', default=None, help='Internal degree or inclusive range a:b.')
    p.add_argument('--cap', type=int, default=None, help='Total degree cap in ungraded mode.')
    p.add_argument('--log', default=None, help='Append the dimensions to this csv log.')
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser('e1', help='E_1 page and degeneration verdict.')
    p.add_argument('resolutions')
    p.add_argument('target')
    p.add_argument('--degree', type=int, default=0)
    p.add_argument('--totals', default='-1:2', help='Total degrees, inclusive range a:b.')
    p.add_argument('--variant', choices=(DERIVED, PRINTED), default=DERIVED)
    p.add_argument('--replacement', default=None, help='Factorization with free components standing in for E.')
    p.set_defaults(func=cmd_e1)

    p = sub.add_parser('example', help='Registry examples.')
    p.add_argument('name', nargs='?', default=None)
    p.add_argument('params', nargs='*', help='key=value overrides.')
    p.add_argument('--list', action='store_true')
    p.add_argument('--check', action='store_true', help='Run the manifest instead of emitting the document.')
    p.add_argument('-o', '--output', default='-')
    p.set_defaults(func=cmd_example)

    p = sub.add_parser('selftest', help='Run the verification suites.')
    p.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p.add_argument('--suite', type=int, action='append', default=None, help='One based suite number.')
    p.set_defaults(func=cmd_selftest)

    return parser


RANGE_OPTIONS = ('--n', '--degree', '--totals')
NEGATIVE_RANGE = re.compile(r'^-\d+(:-?\d+)?$')


def join_ranges(argv):
    """Attaches values such as -3:3 to their range option, argparse reads them as options otherwise."""
    joined = []
    k = 0
    while k < len(argv):
        if argv[k] in RANGE_OPTIONS and k + 1 < len(argv) and NEGATIVE_RANGE.match(argv[k + 1]):
            joined.append('{0}={1}'.format(argv[k], argv[k + 1]))
            k += 2
        else:
            joined.append(argv[k])
            k += 1
    return joined


def main(argv=None):
    """
    Runs one subcommand.

    Notes:

    * Exit codes: 0 success or valid, 1 invalid input or failed mathematics, 2 I/O or parse failure.
    """

    args = build_parser().parse_args(join_ranges(sys.argv[1:] if argv is None else list(argv)))
    if args.command == 'example' and not args.list and not args.name:
        print('example needs a name, known: {0}'.format(', '.join(sorted(REGISTRY))), file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except DocumentError as error:
        print('error: {0}'.format(error), file=sys.stderr)
        return EXIT_IO
    except ValidationError as error:
        print('invalid: {0}'.format(error), file=sys.stderr)
        for failure in error.failures:
            print('  {0}'.format(failure), file=sys.stderr)
        return EXIT_INVALID
    except MfkitError as error:
        print('error: {0}'.format(error), file=sys.stderr)
        return EXIT_INVALID
    except OSError as error:
        print('error: {0}'.format(error), file=sys.stderr)
        return EXIT_IO
