"""Shared foundations: terms, presentations, finite categories, rewriting."""

from .finite import (FiniteDoubleCategory, Frame, build_double_category,
                     product, validate_finite_dbl)
from .fixtures import (arrow_h, arrow_v, free_square, standard_fixtures,
                       terminal)
from .presentation import Presentation, Relation, parse_presentation, parse_term
from .rewrite import RewriteSystem, canonical, normalize
from .tabulate import finite_to_presentation, tabulate
from .terms import (Gen, HComp, IdH, IdSqH, IdSqV, IdV, SigmaLit, Term,
                    VComp, WhiskL, WhiskR, eval_term, term_to_text)
from .welldef import check_well_defined, enumerate_assignments

__all__ = [
    "FiniteDoubleCategory", "Frame", "build_double_category", "product",
    "validate_finite_dbl", "arrow_h", "arrow_v", "free_square",
    "standard_fixtures", "terminal", "Presentation", "Relation",
    "parse_presentation", "parse_term", "RewriteSystem", "canonical",
    "normalize", "finite_to_presentation", "tabulate", "Gen", "HComp",
    "IdH", "IdSqH", "IdSqV", "IdV", "SigmaLit", "Term", "VComp", "WhiskL",
    "WhiskR", "eval_term", "term_to_text", "check_well_defined",
    "enumerate_assignments",
]
