"""Generalized k-descent codes on permutations and the Hopf algebras DSym(k) and DQSym(k)."""

from .dsym import (
    CodeElement,
    CodeTensor,
    NotInSubalgebra,
    count_free_generators,
    fq_coproduct,
    fq_product,
    generator_series,
    hilbert_series,
    ribbon_coproduct,
    ribbon_product,
)
from .fqsym import HopfElement, TensorElement
from .kcode import (
    EquivClass,
    KCode,
    classes_of_Sn,
    count_codes,
    descent_code,
    enumerate_codes,
    max_rep,
    min_rep,
    recoil_code,
)
from .perm import parse_perm, render_word, standardize
from .series import PowerSeries
from .stats import MultiPoly, eulerian_poly, major_poly

__version__ = "0.1.0"
