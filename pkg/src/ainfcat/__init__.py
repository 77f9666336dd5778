"""Exact-arithmetic A-infinity categories.

Finite, finitely graded A-infinity categories over Q or F_p: axiom
verification, twisted complexes and cones, Massey triple products, the
Massey-product criterion for distinguished triangles, and directedness
analysis.  All arithmetic is exact.
"""

from .field import FieldSpec, FieldScalar, GF, QQ
from .graded import GradedSpace, GradedElement, GradedMap
from .category import (AInftyCategory, AmFunctor, HomologyData,
                       cohomology_category, check_formality_witness,
                       compose_functors, identity_functor,
                       verify_functor, verify_relations, verify_relations_m,
                       verify_units)
from .twisted import (FreeObject, FreeElement, TwObject, TwFunctor,
                      b_free, b_tw, cone, embed_object, m_tw,
                      materialize_tw, shift_tw, truncation_check,
                      verify_maurer_cartan)
from .massey import (H0Category, MasseyResult, brute_force_distinguished,
                     cosets_equal, is_distinguished, massey_ainfty,
                     massey_triangulated)
from .directed import DirectedStructure, analyze_directed, block_form_check
from . import fixtures

__all__ = [
    "FieldSpec", "FieldScalar", "GF", "QQ",
    "GradedSpace", "GradedElement", "GradedMap",
    "AInftyCategory", "AmFunctor", "HomologyData",
    "cohomology_category", "check_formality_witness", "compose_functors",
    "identity_functor", "verify_functor", "verify_relations",
    "verify_relations_m", "verify_units",
    "FreeObject", "FreeElement", "TwObject", "TwFunctor",
    "b_free", "b_tw", "cone", "embed_object", "m_tw", "materialize_tw",
    "shift_tw", "truncation_check", "verify_maurer_cartan",
    "H0Category", "MasseyResult", "brute_force_distinguished",
    "cosets_equal", "is_distinguished", "massey_ainfty",
    "massey_triangulated",
    "DirectedStructure", "analyze_directed", "block_form_check",
    "fixtures",
]
