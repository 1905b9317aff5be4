"""Utility function module."""

from mfkit.utilities.errors import MfkitError
from mfkit.utilities.errors import RingMismatchError
from mfkit.utilities.errors import DimensionMismatchError
from mfkit.utilities.errors import GradingError
from mfkit.utilities.errors import ValidationError
from mfkit.utilities.errors import SplittingError
from mfkit.utilities.errors import DocumentError
from mfkit.utilities.ring import FieldSpec
from mfkit.utilities.ring import GradedRing
from mfkit.utilities.ring import make_ring
from mfkit.utilities.ring import parse_poly
from mfkit.utilities.ring import format_poly
from mfkit.utilities.ring import homogeneous_degree
from mfkit.utilities.ring import graded_piece_basis
from mfkit.utilities.linalg import exact_solve
from mfkit.utilities.linalg import nullspace
from mfkit.utilities.linalg import rank
from mfkit.utilities.matrix import PolyMatrix
from mfkit.utilities.matrix import from_rows
from mfkit.utilities.matrix import block
from mfkit.utilities.print import print_report
from mfkit.utilities.print import print_hom_table
from mfkit.utilities.print import print_e1_table
from mfkit.utilities.log import log_hom_dimension
from mfkit.utilities.log import flush_hom_log
from mfkit.utilities.save import parse_document
from mfkit.utilities.save import write_document
from mfkit.utilities.save import load_document
from mfkit.utilities.save import save_document


__all__ = [
    'MfkitError',
    'RingMismatchError',
    'DimensionMismatchError',
    'GradingError',
    'ValidationError',
    'SplittingError',
    'DocumentError',
    'FieldSpec',
    'GradedRing',
    'make_ring',
    'parse_poly',
    'format_poly',
    'homogeneous_degree',
    'graded_piece_basis',
    'exact_solve',
    'nullspace',
    'rank',
    'PolyMatrix',
    'from_rows',
    'block',
    'print_report',
    'print_hom_table',
    'print_e1_table',
    'log_hom_dimension',
    'flush_hom_log',
    'parse_document',
    'write_document',
    'load_document',
    'save_document',
]
