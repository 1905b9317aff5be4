"""Document saving and loading related utility functions."""

import json
import sys
from dataclasses import dataclass

from .errors import DocumentError, MfkitError
from .matrix import PolyMatrix
from .ring import (
    PRIME_FIELD, RATIONALS, FieldSpec, GradedRing, coeff_from_string, coeff_to_string, parse_poly, poly_from_terms,
)


SCHEMA_VERSION = '1'

FACTORIZATION = 'factorization'
MORPHISM = 'morphism'
COMPLEX = 'complex'
CHAIN = 'chain'
RESOLUTIONS = 'resolutions'

PAYLOAD_TYPES = (FACTORIZATION, MORPHISM, COMPLEX, CHAIN, RESOLUTIONS)


@dataclass(frozen=True)
class Document:
    """
    A ring, a potential and one payload object.

    Args:
        ring: `GradedRing` - Base ring.
        w: `PolyElement` - Potential.
        graded: `bool` - Graded mode flag of the payload.
        payload_type: `str` - One of `PAYLOAD_TYPES`.
        payload: `object` - `Factorization`, `FactMorphism`, `FreeComplex`, `Chain` or a pair of `FreeComplex`.
        schema_version: `str` - Format version.
    """

    ring: GradedRing
    w: object
    graded: bool
    payload_type: str
    payload: object
    schema_version: str = SCHEMA_VERSION


@dataclass(frozen=True)
class Chain:
    """
    A bounded complex of factorizations E_start -> E_start+1 -> ...

    Args:
        objects: `list` of `Factorization` - Terms.
        maps: `list` of `FactMorphism` - Consecutive maps.
        start: `int` - Index of the first term.
    """

    objects: tuple
    maps: tuple
    start: int = 0


def _require(mapping, key, path, kind=None):
    if not isinstance(mapping, dict) or key not in mapping:
        raise DocumentError('missing field', '{0}.{1}'.format(path, key) if path else key)
    value = mapping[key]
    if kind is not None and not isinstance(value, kind):
        raise DocumentError('expected {0}'.format(kind.__name__ if isinstance(kind, type) else 'a list'),
                            '{0}.{1}'.format(path, key) if path else key)
    return value


def _int_list(value, path):
    if not isinstance(value, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in value):
        raise DocumentError('expected a list of integers', path)
    return tuple(value)


# Ring and polynomials

def ring_to_dict(ring):
    field = {'kind': ring.field.kind}
    if ring.field.kind == PRIME_FIELD:
        field['p'] = ring.field.p
    return {'vars': list(ring.vars), 'weights': list(ring.weights), 'field': field}


def ring_from_dict(data, path='ring'):
    names = _require(data, 'vars', path, list)
    if any(not isinstance(v, str) for v in names):
        raise DocumentError('variable names must be strings', path + '.vars')
    weights = _int_list(data.get('weights', [1] * len(names)), path + '.weights')
    field = data.get('field', {'kind': RATIONALS})
    kind = _require(field, 'kind', path + '.field', str)
    try:
        spec = FieldSpec(kind, int(field.get('p', 0)))
        return GradedRing(tuple(names), weights, spec)
    except MfkitError as error:
        raise DocumentError(str(error), path)


def poly_to_list(ring, p):
    """Terms in graded lexicographic order, leading term first."""
    return [{'coeff': coeff_to_string(ring, c), 'exps': list(m)} for m, c in p.terms()]


def poly_from_list(ring, data, path):
    """Reads a polynomial given as a list of terms or as infix text."""
    if isinstance(data, str):
        try:
            return parse_poly(ring, data)
        except MfkitError as error:
            raise DocumentError(str(error), path)
    if not isinstance(data, list):
        raise DocumentError('expected a list of terms', path)
    terms = []
    for k, term in enumerate(data):
        term_path = '{0}[{1}]'.format(path, k)
        coeff = _require(term, 'coeff', term_path)
        exps = _int_list(_require(term, 'exps', term_path), term_path + '.exps')
        try:
            terms.append((coeff_from_string(ring, str(coeff)), exps))
        except (MfkitError, ValueError) as error:
            raise DocumentError('bad coefficient {0!r}: {1}'.format(coeff, error), term_path + '.coeff')
    try:
        return poly_from_terms(ring, terms)
    except MfkitError as error:
        raise DocumentError(str(error), path)


def matrix_to_list(matrix):
    return [[poly_to_list(matrix.ring, p) for p in row] for row in matrix.entries]


def matrix_from_list(ring, data, rows, cols, path):
    """Reads a row-major matrix and checks it against the expected shape."""
    if not isinstance(data, list):
        raise DocumentError('expected a list of rows', path)
    if len(data) != rows:
        raise DocumentError('expected {0} rows, got {1}'.format(rows, len(data)), path)
    entries = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise DocumentError('expected {0} entries'.format(cols), '{0}[{1}]'.format(path, i))
        entries.append(tuple(poly_from_list(ring, p, '{0}[{1}][{2}]'.format(path, i, j)) for j, p in enumerate(row)))
    return PolyMatrix(ring, rows, cols, tuple(entries))


# Payloads

def factorization_to_dict(E):
    return {
        'e1_twists': list(E.e1),
        'e0_twists': list(E.e0),
        'phi0': matrix_to_list(E.phi0),
        'phim1': matrix_to_list(E.phim1),
    }


def factorization_from_dict(ring, w, graded, data, path):
    from mfkit.algorithms.factorization import Factorization

    e1 = _int_list(_require(data, 'e1_twists', path), path + '.e1_twists')
    e0 = _int_list(_require(data, 'e0_twists', path), path + '.e0_twists')
    phi0 = matrix_from_list(ring, _require(data, 'phi0', path), len(e0), len(e1), path + '.phi0')
    phim1 = matrix_from_list(ring, _require(data, 'phim1', path), len(e1), len(e0), path + '.phim1')
    return Factorization(ring, w, e1, e0, phi0, phim1, graded)


def morphism_to_dict(g):
    return {
        'source': factorization_to_dict(g.source),
        'target': factorization_to_dict(g.target),
        'g0': matrix_to_list(g.g0),
        'gm1': matrix_to_list(g.gm1),
        'degree': g.degree,
    }


def morphism_from_dict(ring, w, graded, data, path, source=None, target=None):
    from mfkit.algorithms.factorization import FactMorphism

    if source is None:
        source = factorization_from_dict(ring, w, graded, _require(data, 'source', path), path + '.source')
    if target is None:
        target = factorization_from_dict(ring, w, graded, _require(data, 'target', path), path + '.target')
    degree = data.get('degree', 0)
    if isinstance(degree, bool) or not isinstance(degree, int):
        raise DocumentError('expected an integer', path + '.degree')
    g0 = matrix_from_list(ring, _require(data, 'g0', path), len(target.e0), len(source.e0), path + '.g0')
    gm1 = matrix_from_list(ring, _require(data, 'gm1', path), len(target.e1), len(source.e1), path + '.gm1')
    return FactMorphism(source, target, g0, gm1, degree)


def complex_to_dict(A):
    return {
        'modules': [{'index': i, 'twists': list(A.modules[i])} for i in sorted(A.modules)],
        'diffs': [{'index': i, 'matrix': matrix_to_list(A.diffs[i])} for i in sorted(A.diffs)],
    }


def complex_from_dict(ring, data, path):
    from mfkit.algorithms.complex import make_complex

    modules = {}
    for k, entry in enumerate(_require(data, 'modules', path, list)):
        entry_path = '{0}.modules[{1}]'.format(path, k)
        index = _require(entry, 'index', entry_path, int)
        modules[index] = _int_list(_require(entry, 'twists', entry_path), entry_path + '.twists')
    diffs = {}
    for k, entry in enumerate(data.get('diffs', [])):
        entry_path = '{0}.diffs[{1}]'.format(path, k)
        index = _require(entry, 'index', entry_path, int)
        rows, cols = len(modules.get(index, ())), len(modules.get(index - 1, ()))
        diffs[index] = matrix_from_list(ring, _require(entry, 'matrix', entry_path), rows, cols, entry_path + '.matrix')
    return make_complex(ring, modules, diffs)


def chain_to_dict(chain):
    return {
        'start': chain.start,
        'objects': [factorization_to_dict(E) for E in chain.objects],
        'maps': [{'g0': matrix_to_list(g.g0), 'gm1': matrix_to_list(g.gm1), 'degree': g.degree} for g in chain.maps],
    }


def chain_from_dict(ring, w, graded, data, path):
    objects = [factorization_from_dict(ring, w, graded, E, '{0}.objects[{1}]'.format(path, k))
               for k, E in enumerate(_require(data, 'objects', path, list))]
    raw_maps = data.get('maps', [])
    if len(raw_maps) != max(len(objects) - 1, 0):
        raise DocumentError('expected {0} maps'.format(max(len(objects) - 1, 0)), path + '.maps')
    maps = [morphism_from_dict(ring, w, graded, g, '{0}.maps[{1}]'.format(path, k), objects[k], objects[k + 1])
            for k, g in enumerate(raw_maps)]
    start = data.get('start', 0)
    return Chain(tuple(objects), tuple(maps), start)


def _payload_to_dict(payload_type, payload):
    if payload_type == FACTORIZATION:
        return factorization_to_dict(payload)
    if payload_type == MORPHISM:
        return morphism_to_dict(payload)
    if payload_type == COMPLEX:
        return complex_to_dict(payload)
    if payload_type == CHAIN:
        return chain_to_dict(payload)
    return {'m1': complex_to_dict(payload[0]), '0': complex_to_dict(payload[1])}


def _payload_from_dict(ring, w, graded, data):
    payload_type = _require(data, 'type', 'payload', str)
    if payload_type == FACTORIZATION:
        return payload_type, factorization_from_dict(ring, w, graded, data, 'payload')
    if payload_type == MORPHISM:
        return payload_type, morphism_from_dict(ring, w, graded, data, 'payload')
    if payload_type == COMPLEX:
        return payload_type, complex_from_dict(ring, data, 'payload')
    if payload_type == CHAIN:
        return payload_type, chain_from_dict(ring, w, graded, data, 'payload')
    if payload_type == RESOLUTIONS:
        return payload_type, (complex_from_dict(ring, _require(data, 'm1', 'payload'), 'payload.m1'),
                              complex_from_dict(ring, _require(data, '0', 'payload'), 'payload.0'))
    raise DocumentError('unknown payload type {0!r}'.format(payload_type), 'payload.type')


# Documents

def document_to_dict(document):
    payload = _payload_to_dict(document.payload_type, document.payload)
    payload['type'] = document.payload_type
    return {
        'schema_version': document.schema_version,
        'ring': ring_to_dict(document.ring),
        'graded': document.graded,
        'w': poly_to_list(document.ring, document.w),
        'payload': payload,
    }


def validate_document(document):
    """
    Runs the checker matching the payload type.

    Args:
        document: `Document` - Loaded document.
    """

    from mfkit.algorithms.complex import validate_complex
    from mfkit.algorithms.factorization import Report, validate_factorization, validate_morphism

    kind, payload = document.payload_type, document.payload
    if kind == FACTORIZATION:
        return validate_factorization(payload)
    if kind == MORPHISM:
        report = Report('morphism')
        for part in (validate_factorization(payload.source), validate_factorization(payload.target),
                     validate_morphism(payload)):
            report.failures.extend(part.failures)
        return report
    if kind == COMPLEX:
        return validate_complex(payload, document.graded)
    if kind == CHAIN:
        report = Report('chain')
        for k, E in enumerate(payload.objects):
            report.failures.extend('object {0}: {1}'.format(k, f) for f in validate_factorization(E).failures)
        for k, g in enumerate(payload.maps):
            report.failures.extend('map {0}: {1}'.format(k, f) for f in validate_morphism(g).failures)
        return report
    report = Report('resolutions')
    for name, A in zip(('m1', '0'), payload):
        report.failures.extend('{0}: {1}'.format(name, f) for f in validate_complex(A, document.graded).failures)
    return report


def parse_document(
        text,
        validate=True
    ):
    """
    Reads a document from JSON text.

    Args:
        text: `str` or `bytes` - Document text, UTF-8 when given as bytes.
        validate: `bool` - If `True`, the payload must pass its checker.

    Notes:

    * Schema violations raise `DocumentError` naming the line or the dotted field path.
    * Checker failures raise `ValidationError`.
    """

    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as error:
            raise DocumentError('not UTF-8 text: {0}'.format(error))
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise DocumentError('line {0} column {1}: {2}'.format(error.lineno, error.colno, error.msg))
    if not isinstance(data, dict):
        raise DocumentError('a document is a JSON object')

    version = str(_require(data, 'schema_version', ''))
    if version != SCHEMA_VERSION:
        raise DocumentError('unsupported schema version {0!r}'.format(version), 'schema_version')
    ring = ring_from_dict(_require(data, 'ring', '', dict))
    graded = data.get('graded', True)
    if not isinstance(graded, bool):
        raise DocumentError('expected true or false', 'graded')
    w = poly_from_list(ring, _require(data, 'w', ''), 'w')
    payload_type, payload = _payload_from_dict(ring, w, graded, _require(data, 'payload', '', dict))

    document = Document(ring, w, graded, payload_type, payload, version)
    if validate:
        validate_document(document).raise_if_invalid()
    return document


def write_document(document):
    """Canonical JSON text: sorted keys, two space indentation, one trailing newline."""
    return json.dumps(document_to_dict(document), indent=2, sort_keys=True) + '\n'


def canonicalize(text):
    """Normalizes document text without validating its payload."""
    return write_document(parse_document(text, validate=False))


def load_document(
        file_path,
        validate=True
    ):
    """
    Loads a document from a file, `-` reads standard input.

    Args:
        file_path: `str` - Path to the file.
        validate: `bool` - If `True`, the payload must pass its checker.
    """

    if file_path == '-':
        return parse_document(sys.stdin.read(), validate)
    try:
        with open(file_path, 'rb') as document_file:
            data = document_file.read()
    except OSError as error:
        raise DocumentError('cannot read {0}: {1}'.format(file_path, error.strerror))
    return parse_document(data, validate)


def save_document(
        document,
        file_path
    ):
    """
    Saves a document in canonical form, `-` writes to standard output.

    Args:
        document: `Document` - Document to save.
        file_path: `str` - Path to the file.
    """

    text = write_document(document)
    if file_path == '-':
        sys.stdout.write(text)
        return
    with open(file_path, 'w', encoding='utf-8') as document_file:
        document_file.write(text)
