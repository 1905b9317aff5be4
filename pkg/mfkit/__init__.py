"""Exact computations with matrix factorizations of graded potentials."""

from . import utilities
from . import algorithms
from .utilities.ring import make_ring
from .algorithms.factorization import make_factorization
from .algorithms.fold import stabilize
from .algorithms.hom import hom_classes
from .algorithms.corpus import build_example


__all__ = [
    'make_ring',
    'make_factorization',
    'stabilize',
    'hom_classes',
    'build_example',
]
__version__ = '0.1.0'
__author__ = 'mfkit developers'
