"""Double functors, transformations, modifications, hom categories, duality."""

from .functor import (DblFunctor, check_functor, compose_functors,
                      constant_functor, enumerate_functors,
                      identity_functor)
from .hom import HomDouble, build_hom_dbl
from .modification import (DblModification, ModFrame, check_modification,
                           enumerate_modifications, identity_modification)
from .transform import (DblTransformation, check_transformation,
                        enumerate_transformations,
                        identity_transformation, vcompose_transformations)
from .transpose import (transpose, transpose_functor,
                        transpose_transformation, verity_iso_check)

__all__ = [
    "DblFunctor", "check_functor", "compose_functors", "constant_functor",
    "enumerate_functors", "identity_functor", "HomDouble", "build_hom_dbl",
    "DblModification", "ModFrame", "check_modification",
    "enumerate_modifications", "identity_modification",
    "DblTransformation", "check_transformation",
    "enumerate_transformations", "identity_transformation",
    "vcompose_transformations", "transpose", "transpose_functor",
    "transpose_transformation", "verity_iso_check",
]
