"""B_h[g] sets: finite-field constructions, homomorphic reductions and exact verification."""

from .algebra import FieldDescriptor, FieldElement, discrete_log, find_primitive, is_primitive
from .constructions import bose_chowla, derksen_set, gt_modular, ruzsa_modular, singer_generalized
from .errors import BhError
from .reduction import bc_g, cardinality_preserved, gt_g, reduce_mod, reduce_set, ruzsa_g
from .sets import BhSet, image_set
from .verifier import exact_g, verify

__all__ = [
    "BhError",
    "BhSet",
    "FieldDescriptor",
    "FieldElement",
    "bc_g",
    "bose_chowla",
    "cardinality_preserved",
    "derksen_set",
    "discrete_log",
    "exact_g",
    "find_primitive",
    "gt_g",
    "gt_modular",
    "image_set",
    "is_primitive",
    "reduce_mod",
    "reduce_set",
    "ruzsa_g",
    "ruzsa_modular",
    "singer_generalized",
    "verify",
]
