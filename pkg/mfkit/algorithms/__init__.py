"""Algorithm module."""

from mfkit.algorithms.factorization import Factorization
from mfkit.algorithms.factorization import FactMorphism
from mfkit.algorithms.factorization import make_factorization
from mfkit.algorithms.factorization import validate_factorization
from mfkit.algorithms.factorization import validate_morphism
from mfkit.algorithms.factorization import shift
from mfkit.algorithms.factorization import twist
from mfkit.algorithms.factorization import cone
from mfkit.algorithms.factorization import contractible_envelope
from mfkit.algorithms.factorization import direct_sum
from mfkit.algorithms.factorization import base_change
from mfkit.algorithms.complex import FreeComplex
from mfkit.algorithms.complex import make_complex
from mfkit.algorithms.koszul import koszul_complex
from mfkit.algorithms.koszul import koszul_data
from mfkit.algorithms.koszul import split_w
from mfkit.algorithms.fold import fold
from mfkit.algorithms.fold import fold_cone
from mfkit.algorithms.fold import stabilize
from mfkit.algorithms.fold import totalize
from mfkit.algorithms.hom import hom_slice
from mfkit.algorithms.hom import hom_classes
from mfkit.algorithms.hom import solve_homotopy
from mfkit.algorithms.hom import is_contractible
from mfkit.algorithms.hom import orthogonality_check
from mfkit.algorithms.spectral import ext_koszul
from mfkit.algorithms.spectral import e1_page
from mfkit.algorithms.spectral import ss_degeneration_check
from mfkit.algorithms.corpus import build_example


__all__ = [
    'Factorization',
    'FactMorphism',
    'make_factorization',
    'validate_factorization',
    'validate_morphism',
    'shift',
    'twist',
    'cone',
    'contractible_envelope',
    'direct_sum',
    'base_change',
    'FreeComplex',
    'make_complex',
    'koszul_complex',
    'koszul_data',
    'split_w',
    'fold',
    'fold_cone',
    'stabilize',
    'totalize',
    'hom_slice',
    'hom_classes',
    'solve_homotopy',
    'is_contractible',
    'orthogonality_check',
    'ext_koszul',
    'e1_page',
    'ss_degeneration_check',
    'build_example',
]
